#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qforge/scalar.hpp"
#include "qforge/word.hpp"

namespace qforge {

// Homogeneous element of V^{⊗degree}: sparse combination of words of one
// length. Terms are kept sorted by word order with no zero coefficients.
class Tensor {
 public:
  using Term = std::pair<Word, Scalar>;

  Tensor(Field field, std::size_t degree) : field_(field), degree_(degree) {}

  // Combines repeated words and drops zeros. Throws MixedDegree / MixedField.
  static Tensor from_terms(Field field, std::size_t degree, std::vector<Term> terms);
  static Tensor monomial(Field field, const Word& w, Scalar c = Scalar(1));

  Field field() const { return field_; }
  std::size_t degree() const { return degree_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(const Word& w) const;
  const Word& leading_word() const { return terms_.back().first; }  // largest

  Tensor operator+(const Tensor& o) const;
  Tensor operator-(const Tensor& o) const;
  Tensor operator*(const Scalar& c) const;
  Tensor operator-() const { return *this * Scalar(-1); }

  // Tensor product: concatenation of words.
  Tensor tensor(const Tensor& o) const;
  Tensor left_letter(Letter x) const;
  Tensor right_letter(Letter x) const;

  friend bool operator==(const Tensor& a, const Tensor& b);

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  Field field_;
  std::size_t degree_;
  std::vector<Term> terms_;
};

// Untwisted pairing: <a1⊗..⊗ak, u1⊗..⊗uk> = prod a_j(u_j), dual word basis.
Scalar pair(const Tensor& functional, const Tensor& vector);

// Polynomial-style rendering shared by reports and the presentation printer.
std::string format_terms(const std::vector<std::pair<Word, Scalar>>& terms,
                         const std::vector<std::string>& names);

}  // namespace qforge

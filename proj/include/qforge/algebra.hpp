#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qforge/matrix.hpp"
#include "qforge/quadratic.hpp"

namespace qforge {

// Finite-dimensional Z₂-graded algebra given by structure constants against a
// labelled basis. Z-degrees are kept when the basis comes from normal words.
class FiniteAlgebra {
 public:
  FiniteAlgebra(Field field, std::vector<std::string> labels, std::vector<int> parity,
                std::vector<SparseCoords> table, Vec unit);

  Field field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& parity() const { return parity_; }
  const Vec& unit() const { return unit_; }

  // Optional Z-degree per basis element.
  const std::optional<std::vector<std::size_t>>& degrees() const { return degrees_; }
  void set_degrees(std::vector<std::size_t> degrees);

  // basis_i · basis_j
  const SparseCoords& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  Vec multiply(const Vec& a, const Vec& b) const;
  Vec basis_vector(std::size_t i) const;
  // Matrix of x ↦ a·x (columns = images of basis vectors).
  Matrix left_matrix(const Vec& a) const;
  Matrix right_matrix(const Vec& a) const;

  // Exhaustive checks over basis pairs / triples.
  bool is_associative() const;
  bool is_unital() const;
  bool is_parity_homogeneous() const;
  // Parity of a vector, or nullopt if it mixes parities (0 counts as even).
  std::optional<int> parity_of(const Vec& v) const;

  // "x*y - 2*1" style rendering against the labels.
  std::string format_element(const Vec& v) const;

 private:
  Field field_;
  std::vector<std::string> labels_;
  std::vector<int> parity_;
  std::vector<SparseCoords> table_;
  Vec unit_;
  std::optional<std::vector<std::size_t>> degrees_;
};

// A linear map between finite algebras with its exact verification.
struct IsoCertificate {
  Matrix map;  // columns: images of source basis vectors
  bool unital = false;
  bool multiplicative = false;
  bool bijective = false;
  std::size_t pairs_checked = 0;
  bool valid() const { return unital && multiplicative && bijective; }
};

IsoCertificate check_homomorphism(const FiniteAlgebra& source, const FiniteAlgebra& target, const Matrix& map);

// Span membership / rank helpers on coordinate vectors.
std::size_t rank_of(const std::vector<Vec>& vs, std::size_t dim);

}  // namespace qforge

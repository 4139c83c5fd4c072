#pragma once

#include <vector>

#include "qforge/sparse_rref.hpp"
#include "qforge/tensor.hpp"

namespace qforge {

// Subspace of V^{⊗degree}, dim V = generators, held in reduced row-echelon
// form: each basis vector's largest word is its pivot (coefficient 1) and no
// pivot word occurs in another basis vector. Basis is sorted by pivot, so
// structural equality is subspace equality.
class Subspace {
 public:
  Subspace(Field field, std::size_t generators, std::size_t degree)
      : field_(field), generators_(generators), degree_(degree) {}

  Field field() const { return field_; }
  std::size_t generators() const { return generators_; }
  std::size_t degree() const { return degree_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Tensor>& basis() const { return basis_; }

  std::vector<Word> pivots() const;
  // Words of V^{⊗degree} that are not pivots, increasing.
  std::vector<Word> non_pivots() const;

  // Remainder of v modulo the subspace (a combination of non-pivot words).
  Tensor reduce(const Tensor& v) const;
  bool contains(const Tensor& v) const { return reduce(v).is_zero(); }
  bool contains(const Subspace& other) const;

  // Coordinates of a member of the subspace against basis(); read off the
  // pivot coefficients. Throws DimensionMismatch if v is not a member.
  std::vector<Scalar> coordinates(const Tensor& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  friend Subspace echelonize(Field, std::size_t, std::size_t, const std::vector<Tensor>&);
  Field field_;
  std::size_t generators_;
  std::size_t degree_;
  std::vector<Tensor> basis_;
};

// Unique reduced echelon basis of the span. Throws MixedDegree / MixedField.
Subspace echelonize(Field field, std::size_t generators, std::size_t degree,
                    const std::vector<Tensor>& vectors);

Subspace span_sum(const Subspace& a, const Subspace& b);

// Zassenhaus intersection.
Subspace intersect(const Subspace& a, const Subspace& b);

// {f in (V*)^{⊗k} : f(v) = 0 for all v in s} under the untwisted pairing.
Subspace annihilator(const Subspace& s);

// Tensor products of subspaces with full tensor powers: V^{⊗left} ⊗ s ⊗ V^{⊗right}.
Subspace pad(const Subspace& s, std::size_t left, std::size_t right);

}  // namespace qforge

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qforge/matrix.hpp"
#include "qforge/sparse_rref.hpp"
#include "qforge/subspace.hpp"

namespace qforge {

// Caps on the size of word spaces touched by a computation.
struct Limits {
  std::uint64_t word_cap = 1'000'000;
  // When set, searches for a vanishing degree give up past this degree.
  std::optional<std::size_t> degree_cap;
  // Reads QFORGE_RESOURCE_CAP when set.
  static Limits from_env();
};

// T(V)/(R): ordered generators (all of degree 1) and an echelonized relation
// subspace of V⊗V. R = {0} is allowed (free algebra).
class QuadraticPresentation {
 public:
  QuadraticPresentation(Field field, std::vector<std::string> generators, const std::vector<Tensor>& relations);
  QuadraticPresentation(std::vector<std::string> generators, Subspace relations);

  Field field() const { return relations_.field(); }
  std::size_t num_generators() const { return generators_.size(); }
  const std::vector<std::string>& generators() const { return generators_; }
  const Subspace& relations() const { return relations_; }

 private:
  std::vector<std::string> generators_;
  Subspace relations_;
};

using SparseCoords = std::vector<std::pair<std::size_t, Scalar>>;

// Truncation T_{<=L}(V) / J_{<=L}, where J_{<=L} is spanned by u (r - theta(r)) v
// with |u| + |v| + 2 <= L and r over the echelon basis of R. theta = 0 gives
// the graded quotient degree by degree. Normal words are the non-pivot words
// of J under deglex, pivots being largest words.
class FilteredQuotient {
 public:
  FilteredQuotient(const QuadraticPresentation& p, Vec theta, const Limits& limits);

  // Adds levels up to L (no-op if already there). Throws ResourceBound when
  // dim V ^ L exceeds the word cap.
  void extend_to(std::size_t level);

  std::size_t level() const { return level_; }
  // dim T_{<=L}/J_{<=L} as recorded when level L was completed.
  std::size_t quotient_dim(std::size_t level) const { return quotient_dims_.at(level); }
  // Number of normal words of exactly this length.
  std::size_t normal_count(std::size_t length) const;
  std::vector<Word> normal_words(std::size_t length) const;
  bool is_normal(const Word& w) const;

  // Class of a word of length <= level() as a combination of normal words.
  std::vector<std::pair<Word, Scalar>> reduce(const Word& w) const;

 private:
  void add_level(std::size_t level);

  Field field_;
  std::size_t generators_;
  std::vector<Tensor> relation_basis_;
  Vec theta_;
  Limits limits_;
  WordCoder coder_;
  SparseRref rref_;
  std::size_t level_ = 1;
  std::vector<std::size_t> quotient_dims_;
  // Sorted pivot keys after the previous and the current level.
  std::vector<std::uint64_t> old_pivots_;
  std::vector<std::uint64_t> new_pivots_;
};

// Graded component P_k: normal words and, for each other word, its expansion
// in normal words modulo I_k.
struct GradedSlice {
  std::size_t degree = 0;
  std::vector<Word> basis;
  std::map<Word, SparseCoords> lift_coefficients;

  std::size_t dim() const { return basis.size(); }
  std::optional<std::size_t> index_of(const Word& w) const;
};

// Slices P_0..P_max of a presentation, computed once and then read-only.
class SliceTower {
 public:
  SliceTower(const QuadraticPresentation& p, std::size_t max_degree, const Limits& limits = {});

  const QuadraticPresentation& presentation() const { return *presentation_; }
  std::size_t max_degree() const { return slices_.size() - 1; }
  const GradedSlice& slice(std::size_t k) const { return slices_.at(k); }
  std::size_t dim(std::size_t k) const { return slices_.at(k).dim(); }

  Vec reduce_word(const Word& w) const;
  Vec reduce(const Tensor& t) const;
  // Combination of normal words with the given coordinates.
  Tensor lift(const Vec& coords, std::size_t degree) const;
  Vec multiply(const Vec& a, std::size_t deg_a, const Vec& b, std::size_t deg_b) const;

 private:
  std::shared_ptr<const QuadraticPresentation> presentation_;
  std::vector<GradedSlice> slices_;
};

GradedSlice degree_component(const QuadraticPresentation& p, std::size_t k, const Limits& limits = {});
std::vector<std::size_t> hilbert_series(const QuadraticPresentation& p, std::size_t max_degree,
                                        const Limits& limits = {});

// Top nonvanishing degree of a finite-dimensional presentation. Throws
// NotFiniteDimensional if no vanishing degree is reached under the cap.
std::size_t top_degree(const QuadraticPresentation& p, const Limits& limits = {});

QuadraticPresentation quadratic_dual(const QuadraticPresentation& p);
std::vector<std::string> dual_generator_names(const std::vector<std::string>& names);

// Degree-2 central elements as an echelonized list of coordinate vectors in
// the normal-word basis of P_2.
std::vector<Vec> central_degree2(const QuadraticPresentation& p, const Limits& limits = {});
bool is_central_degree2(const SliceTower& tower, const Vec& z);

struct RegularityReport {
  std::size_t bound = 0;
  std::vector<bool> left_injective;
  std::vector<bool> right_injective;
  std::optional<std::size_t> first_failure;
  bool regular() const { return !first_failure; }
};

// Injectivity of z·- and -·z from P_k to P_{k+2} for k <= bound. Throws
// ZeroElement if z vanishes in P_2.
RegularityReport regular_upto(const QuadraticPresentation& p, const Tensor& z, std::size_t bound,
                              const Limits& limits = {});

struct KoszulCheck {
  bool pass = true;
  std::optional<std::size_t> first_failing_degree;
  std::vector<long long> product_coefficients;
};

// H_P(t) H_{P^!}(-t) = 1 up to max_degree; a failure certifies non-Koszulity.
KoszulCheck koszul_numeric_check(const QuadraticPresentation& p, std::size_t max_degree,
                                 const Limits& limits = {});

}  // namespace qforge

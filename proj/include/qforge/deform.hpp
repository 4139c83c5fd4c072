#pragma once

#include "qforge/algebra.hpp"
#include "qforge/clifford.hpp"

namespace qforge {

struct PbwReport {
  std::size_t top_degree = 0;  // n
  std::size_t expected = 0;    // dim E
  std::size_t at_n1 = 0;       // dim T_{<=n+1}/J at n+1
  std::size_t at_n2 = 0;       // and at n+2
  bool pass() const { return at_n1 == expected && at_n2 == expected; }
};

// Truncated-quotient dimensions for any candidate θ (Clifford or not).
PbwReport pbw_check(const QuadraticPresentation& e, const Vec& theta, const Limits& limits = {});

// E(θ) with the normal words of E as basis.
struct Deformation {
  QuadraticPresentation presentation;
  Vec theta;
  std::size_t top_degree = 0;
  std::vector<Word> words;        // basis, deglex
  std::vector<std::size_t> graded_dims;  // dim E_k, k = 0..n
  FiniteAlgebra algebra;
  // Left multiplication by each generator.
  std::vector<Matrix> generator_action;

  // Image of a word of any length (product of generator actions on 1).
  Vec word_image(const Word& w) const;
};

Deformation build_deformation(const CliffordMap& theta, const Limits& limits = {});
// Skips the Clifford precondition so a non-Clifford θ surfaces as PBWFailure.
Deformation build_deformation_unchecked(const QuadraticPresentation& e, const Vec& theta,
                                        const Limits& limits = {});

struct Z2Split {
  std::size_t even = 0;
  std::size_t odd = 0;
  std::vector<std::size_t> even_basis;
  std::vector<std::size_t> odd_basis;
};
Z2Split z2_components(const FiniteAlgebra& a);

struct BilinearForm {
  Matrix gram;
  int parity = 0;
  std::size_t rank = 0;
  Word top_word;
};

// ⟨a,b⟩ = coefficient of the unique top normal word in a·b. Throws
// NotFrobeniusTop (dim E_n ≠ 1) and NondegeneracyFailure (singular Gram).
BilinearForm frobenius_form(const Deformation& d);

// E(θ)_1 E(θ)_1 = E(θ)_0 and E(θ)_0 E(θ)_1 = E(θ)_1.
bool strong_grading_check(const FiniteAlgebra& a);

}  // namespace qforge

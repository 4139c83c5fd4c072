#pragma once

#include "qforge/structure.hpp"

namespace qforge {

// Fresh generator name v1, v2, ... not already used.
std::string fresh_generator(const std::vector<std::string>& names);

// Adds a generator v with relations R, x*v + v*x (x ∈ V) and v*v.
QuadraticPresentation trivial_extension(const QuadraticPresentation& e);

// θ on R, 0 on the mixed relations, 1 on v*v.
CliffordMap extend_clifford_map(const CliffordMap& theta);

// Basis {1, a}, a*a = 1, a odd.
FiniteAlgebra group_algebra_Z2(Field field);
// 2x2 matrices, diagonal even, antidiagonal odd; basis E11, E12, E21, E22.
FiniteAlgebra matrix_algebra_M2(Field field);

// Basis index i * dim(b) + j for a_i ⊗ b_j, with the Koszul sign rule.
FiniteAlgebra twisted_tensor(const FiniteAlgebra& a, const FiniteAlgebra& b);

// Υ: CG ⊗̂ CG → M2. Throws FieldLacksI over Q.
IsoCertificate upsilon_iso_check(Field field);

// Linear map from the deformation's word basis, sending each word to the
// product of the images of its letters. Throws RelationNotKilled when a
// deformed relation r − θ(r) does not map to zero.
Matrix induced_map(const Deformation& source, const FiniteAlgebra& target, const std::vector<Vec>& generator_images);

struct TildeIso {
  Deformation extended;  // Ẽ(θ̃)
  Deformation base;      // E(θ)
  FiniteAlgebra target;  // E(θ) ⊗̂ CG
  IsoCertificate certificate;
};

// Ẽ(θ̃) ≅ E(θ) ⊗̂ CG via x ↦ x ⊗̂ 1, v ↦ 1 ⊗̂ a.
TildeIso tilde_iso_check(const CliffordMap& theta, const Limits& limits = {});

struct DoubleCover {
  HypersurfaceInput cover;        // S[v1] (or S[v1, v2]) with z + v1^2 (+ v2^2)
  CliffordMap theta_cover;        // θ of the cover, on S[v..]^!
  CliffordMap theta_extended;     // θ_z extended once or twice
  bool relations_agree = false;   // same relation spaces after aligning generators by position
  bool theta_agree = false;
};

DoubleCover double_branched_cover_dual(const HypersurfaceInput& h, int times, const Limits& limits = {});

struct KnorrerWitness {
  std::size_t base_dim = 0;
  std::size_t ambient_dim = 0;   // dim Ẽ̃(θ̃̃)
  IsoCertificate chi;            // Ẽ̃(θ̃̃) → E(θ) ⊗̂ M2
  Vec idempotent;                // e in Ẽ̃(θ̃̃)
  bool idempotent_even = false;
  bool idempotent_ok = false;    // e² = e, e ≠ 0, e ≠ 1
  IsoCertificate corner;         // E(θ) → e Ẽ̃ e, a ↦ χ⁻¹(a ⊗̂ E11)
  bool full = false;             // the ideal generated by e is everything
  std::size_t corner_dim = 0;
  bool pass() const { return chi.valid() && idempotent_even && idempotent_ok && corner.valid() && full; }
};

// Throws FieldLacksI over Q.
KnorrerWitness knorrer_corner_witness(const CliffordMap& theta, const Limits& limits = {});

struct SemisimpleTransfer {
  bool in_hypothesis = false;
  std::string gate_reason;
  bool base_semisimple = false;
  bool extended_semisimple = false;
  bool agree() const { return base_semisimple == extended_semisimple; }
  bool pass() const { return !in_hypothesis || agree(); }
};

SemisimpleTransfer knorrer_semisimple_transfer(const CliffordMap& theta, const Limits& limits = {});

}  // namespace qforge

#pragma once

#include <string>

#include "qforge/deform.hpp"

namespace qforge {

struct RadicalReport {
  std::vector<Vec> basis;  // row-echelon basis of the radical
  std::size_t dim = 0;
  bool ideal = false;
  bool nilpotent = false;
  std::size_t nilpotency_index = 0;  // smallest k with J^k = 0
  bool homogeneous = false;
  bool semisimple() const { return dim == 0; }
};

// Trace-form radical {a : tr(L_{ab}) = 0 for all b}; valid in characteristic zero.
RadicalReport jacobson_radical(const FiniteAlgebra& a);

// Throws InhomogeneousRadical when the computed radical is not Z₂-graded.
bool graded_semisimple(const FiniteAlgebra& a);

struct SingularityVerdict {
  bool semisimple = false;
  std::size_t radical_dim = 0;
  bool central_verified = false;
  bool koszul_numeric = false;
  std::size_t koszul_degree = 0;
  bool regular_upto_bound = false;
  std::size_t regularity_bound = 0;
  bool asserted_koszul = false;
  bool asserted_as_regular = false;
  bool asserted_gldim = false;
  Vec theta;
  bool isolated() const {
    return semisimple && central_verified && koszul_numeric && regular_upto_bound && asserted_as_regular &&
           asserted_gldim;
  }
  std::string conclusion() const;
};

SingularityVerdict singularity_verdict(const HypersurfaceInput& h, const Limits& limits = {});

// Restriction to the even basis elements, trivially graded.
FiniteAlgebra even_part_algebra(const FiniteAlgebra& a);

struct HypersurfaceDualData {
  QuadraticPresentation a;       // S/(z): relations R ⊕ k r0
  QuadraticPresentation a_dual;  // A^!
  Tensor r0;                     // lift of z
  Tensor r0_star;                // functional: 1 on r0, 0 on R and on the complement
  Vec w;                         // class of r0_star in A^!_2 (normal-word coordinates)
  Tensor w_lift;                 // the same class as a tensor of normal words
  QuadraticPresentation e;       // S^!
  CliffordMap theta;
};

// complement: optional basis of a complement of R ⊕ k r0 in V⊗V; defaults to
// the non-pivot words. Throws ZeroElement, NotCentral, WNotCentral.
HypersurfaceDualData hypersurface_dual_data(const HypersurfaceInput& h, const Limits& limits = {},
                                            const std::vector<Tensor>* complement = nullptr);

struct CornerCrosscheck {
  std::size_t m = 0;  // B[w^{-1}]_0 realized on B_{2m}
  std::size_t top_degree = 0;
  std::size_t dim = 0;
  Vec theta;  // on E = B/(w), echelon coordinates
  IsoCertificate certificate;
  bool pass() const { return certificate.valid(); }
};

// B[w^{-1}]_0 ≅ E(θ)_0 for E = B/(w) and θ: r0 ↦ 1, R_B ↦ 0. Throws ZeroElement,
// NotCentral, NotRegular, NotStabilized.
CornerCrosscheck localization_corner_crosscheck(const QuadraticPresentation& b, const Tensor& w,
                                                const Limits& limits = {});

}  // namespace qforge

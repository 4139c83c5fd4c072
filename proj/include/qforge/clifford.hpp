#pragma once

#include <optional>
#include <vector>

#include "qforge/quadratic.hpp"

namespace qforge {

// V⊗R ∩ R⊗V inside V^{⊗3}.
Subspace overlap_space(const QuadraticPresentation& p);

struct CliffordCheck {
  bool holds = true;
  // Overlap basis vectors w with (θ⊗1 − 1⊗θ)(w) ≠ 0, and those images in V.
  std::vector<Tensor> violated;
  std::vector<Tensor> images;
};

// theta holds one value per echelon basis vector of R. Throws DimensionMismatch.
CliffordCheck clifford_condition(const QuadraticPresentation& p, const Vec& theta);

// Echelonized basis (first-nonzero pivots) of all Clifford maps, as vectors
// against the echelon basis of R.
std::vector<Vec> clifford_map_space(const QuadraticPresentation& p);

// A verified Clifford map of a presentation.
class CliffordMap {
 public:
  // Throws DimensionMismatch or NotClifford.
  CliffordMap(QuadraticPresentation p, Vec values);
  static CliffordMap zero(const QuadraticPresentation& p);

  const QuadraticPresentation& presentation() const { return presentation_; }
  const Vec& values() const { return values_; }
  bool is_zero() const { return qforge::is_zero(values_); }

 private:
  QuadraticPresentation presentation_;
  Vec values_;
};

// Values given on an arbitrary spanning list of R (e.g. the relations as typed
// in a file) re-expressed against the echelon basis. Throws ArityMismatch and
// InconsistentTheta (a dependency among the listed relations is violated).
Vec theta_from_listed(const QuadraticPresentation& p, const std::vector<Tensor>& listed, const Vec& values);
// The inverse direction: evaluate an echelon-basis θ on the listed relations.
Vec theta_on_listed(const QuadraticPresentation& p, const std::vector<Tensor>& listed, const Vec& theta);

// Central degree-2 element z of an ambient algebra S, plus the hypotheses the
// user vouches for. validate() checks z ≠ 0 and z central.
struct HypersurfaceInput {
  QuadraticPresentation ambient;
  Tensor z;
  bool asserted_koszul = false;
  bool asserted_as_regular = false;
  bool asserted_gldim = false;

  void validate(const Limits& limits = {}) const;  // throws ZeroElement / NotCentral
};

// Minimal-support lift of z: its reduction to normal words of S_2.
// Throws ZeroElement if z vanishes in S_2.
Tensor canonical_lift(const QuadraticPresentation& s, const Tensor& z, const Limits& limits = {});

// θ_z on E = S^!: α ↦ α(r₀) over the echelon basis of R^⊥. Optionally with an
// explicit lift r0 (must reduce to the same class as z).
CliffordMap theta_from_central(const HypersurfaceInput& h, const Limits& limits = {});
CliffordMap theta_from_lift(const QuadraticPresentation& s, const Tensor& r0);

// Canonical extension of θ ∈ R* to V*⊗V*: vanishes on the non-pivot words.
Tensor extend_functional(const QuadraticPresentation& p, const Vec& theta);

struct CorrespondenceReport {
  std::size_t clifford_dim = 0;
  std::size_t center_dim = 0;
  // Images of the Clifford basis in E^!_2 (normal-word coordinates).
  std::vector<Vec> images;
  bool injective = false;
  bool matches = false;
};

// Clifford maps of E versus degree-2 central elements of E^! under R* ≅ E^!_2.
CorrespondenceReport center_correspondence_check(const QuadraticPresentation& e, const Limits& limits = {});

}  // namespace qforge

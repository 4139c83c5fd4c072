#include "qforge/clifford.hpp"

#include "qforge/error.hpp"

namespace qforge {

namespace {

// Coordinates of w ∈ V⊗R∩R⊗V against {x⊗r_j} and {r_j⊗x}. Since no pivot word
// of the echelon basis occurs in another basis vector, the coefficient of
// x⊗r_j is the coefficient of w at x·pivot_j (and likewise on the right).
struct OverlapCoords {
  std::vector<Vec> left;   // left[x][j]
  std::vector<Vec> right;  // right[x][j]
};

OverlapCoords overlap_coords(const QuadraticPresentation& p, const Tensor& w) {
  const auto& basis = p.relations().basis();
  const std::size_t d = p.num_generators();
  OverlapCoords oc{std::vector<Vec>(d, Vec(basis.size())), std::vector<Vec>(d, Vec(basis.size()))};
  Tensor left_sum(p.field(), 3), right_sum(p.field(), 3);
  for (Letter x = 0; x < d; ++x) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Word& piv = basis[j].leading_word();
      oc.left[x][j] = w.coefficient(piv.prepend(x));
      oc.right[x][j] = w.coefficient(piv.append(x));
      if (!oc.left[x][j].is_zero()) left_sum = left_sum + basis[j].left_letter(x) * oc.left[x][j];
      if (!oc.right[x][j].is_zero()) right_sum = right_sum + basis[j].right_letter(x) * oc.right[x][j];
    }
  }
  if (!(left_sum == w) || !(right_sum == w))
    fail(ErrorCode::DimensionMismatch, "overlap vector is not in V⊗R ∩ R⊗V");
  return oc;
}

}  // namespace

Subspace overlap_space(const QuadraticPresentation& p) {
  return intersect(pad(p.relations(), 1, 0), pad(p.relations(), 0, 1));
}

CliffordCheck clifford_condition(const QuadraticPresentation& p, const Vec& theta) {
  if (theta.size() != p.relations().dim())
    fail(ErrorCode::DimensionMismatch, "theta has " + std::to_string(theta.size()) + " entries for " +
                                           std::to_string(p.relations().dim()) + " relations");
  CliffordCheck out;
  const Subspace overlap = overlap_space(p);
  for (const Tensor& w : overlap.basis()) {
    OverlapCoords oc = overlap_coords(p, w);
    std::vector<Tensor::Term> terms;
    for (Letter x = 0; x < p.num_generators(); ++x) {
      Scalar v(0);
      for (std::size_t j = 0; j < theta.size(); ++j) {
        v.add_product(theta[j], oc.left[x][j]);
        v.sub_product(theta[j], oc.right[x][j]);
      }
      if (!v.is_zero()) terms.emplace_back(Word{x}, v);
    }
    if (!terms.empty()) {
      out.holds = false;
      out.violated.push_back(w);
      out.images.push_back(Tensor::from_terms(p.field(), 1, std::move(terms)));
    }
  }
  return out;
}

std::vector<Vec> clifford_map_space(const QuadraticPresentation& p) {
  const std::size_t r = p.relations().dim();
  if (r == 0) return {};
  std::vector<Vec> rows;
  const Subspace overlap = overlap_space(p);
  for (const Tensor& w : overlap.basis()) {
    OverlapCoords oc = overlap_coords(p, w);
    for (Letter x = 0; x < p.num_generators(); ++x) {
      Vec row(r);
      for (std::size_t j = 0; j < r; ++j) row[j] = oc.left[x][j] - oc.right[x][j];
      if (!is_zero(row)) rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) {
    std::vector<Vec> all;
    for (std::size_t j = 0; j < r; ++j) {
      Vec e(r);
      e[j] = Scalar(1);
      all.push_back(std::move(e));
    }
    return all;
  }
  return row_space(Matrix::from_rows(rows, r).nullspace(), r);
}

CliffordMap::CliffordMap(QuadraticPresentation p, Vec values)
    : presentation_(std::move(p)), values_(std::move(values)) {
  CliffordCheck c = clifford_condition(presentation_, values_);
  if (!c.holds)
    fail(ErrorCode::NotClifford, "theta violates the Clifford condition on " + std::to_string(c.violated.size()) +
                                     " overlap vector(s), first " +
                                     c.violated.front().to_string(presentation_.generators()));
}

CliffordMap CliffordMap::zero(const QuadraticPresentation& p) { return CliffordMap(p, Vec(p.relations().dim())); }

Vec theta_from_listed(const QuadraticPresentation& p, const std::vector<Tensor>& listed, const Vec& values) {
  if (listed.size() != values.size())
    fail(ErrorCode::ArityMismatch, std::to_string(values.size()) + " values for " + std::to_string(listed.size()) +
                                       " listed relations");
  const std::size_t r = p.relations().dim();
  if (r == 0) return {};
  std::vector<Vec> rows;
  for (const Tensor& l : listed) rows.push_back(p.relations().coordinates(l));
  Matrix a = Matrix::from_rows(rows, r);
  if (a.rank() != r) fail(ErrorCode::DimensionMismatch, "listed relations do not span the relation space");
  auto sol = a.solve(values);
  if (!sol)
    fail(ErrorCode::InconsistentTheta, "the values contradict a linear dependency among the listed relations");
  return *sol;
}

Vec theta_on_listed(const QuadraticPresentation& p, const std::vector<Tensor>& listed, const Vec& theta) {
  Vec out;
  for (const Tensor& l : listed) {
    Vec c = p.relations().coordinates(l);
    Scalar v(0);
    for (std::size_t j = 0; j < c.size(); ++j) v.add_product(c[j], theta.at(j));
    out.push_back(v);
  }
  return out;
}

void HypersurfaceInput::validate(const Limits& limits) const {
  if (z.degree() != 2) fail(ErrorCode::DegreeError, "the central element must have degree 2");
  SliceTower tower(ambient, 3, limits);
  Vec zc = tower.reduce(z);
  if (is_zero(zc)) fail(ErrorCode::ZeroElement, "the central element vanishes in degree 2");
  if (!is_central_degree2(tower, zc))
    fail(ErrorCode::NotCentral, z.to_string(ambient.generators()) + " does not commute with every generator");
}

Tensor canonical_lift(const QuadraticPresentation& s, const Tensor& z, const Limits& limits) {
  SliceTower tower(s, 2, limits);
  Vec zc = tower.reduce(z);
  if (is_zero(zc)) fail(ErrorCode::ZeroElement, "the element vanishes in degree 2");
  return tower.lift(zc, 2);
}

CliffordMap theta_from_lift(const QuadraticPresentation& s, const Tensor& r0) {
  QuadraticPresentation e = quadratic_dual(s);
  Vec theta;
  for (const Tensor& alpha : e.relations().basis()) theta.push_back(pair(alpha, r0));
  return CliffordMap(std::move(e), std::move(theta));
}

CliffordMap theta_from_central(const HypersurfaceInput& h, const Limits& limits) {
  h.validate(limits);
  return theta_from_lift(h.ambient, canonical_lift(h.ambient, h.z, limits));
}

Tensor extend_functional(const QuadraticPresentation& p, const Vec& theta) {
  const auto& basis = p.relations().basis();
  if (theta.size() != basis.size()) fail(ErrorCode::DimensionMismatch, "theta length mismatch");
  std::vector<Tensor::Term> terms;
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (!theta[j].is_zero()) terms.emplace_back(basis[j].leading_word(), theta[j]);
  return Tensor::from_terms(p.field(), 2, std::move(terms));
}

CorrespondenceReport center_correspondence_check(const QuadraticPresentation& e, const Limits& limits) {
  CorrespondenceReport rep;
  auto cliff = clifford_map_space(e);
  QuadraticPresentation dual = quadratic_dual(e);
  SliceTower tower(dual, 2, limits);
  auto center = central_degree2(dual, limits);
  rep.clifford_dim = cliff.size();
  rep.center_dim = center.size();
  for (const Vec& theta : cliff) rep.images.push_back(tower.reduce(extend_functional(e, theta)));
  const std::size_t n2 = tower.dim(2);
  rep.injective = rep.images.empty() || Matrix::from_rows(rep.images, n2).rank() == rep.images.size();
  rep.matches = rep.injective && rep.clifford_dim == rep.center_dim && row_space(rep.images, n2) == center;
  return rep;
}

}  // namespace qforge

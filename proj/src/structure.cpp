#include "qforge/structure.hpp"

#include "qforge/error.hpp"

namespace qforge {

namespace {

bool in_span(const std::vector<Vec>& basis, const Vec& v, std::size_t dim) {
  if (is_zero(v)) return true;
  std::vector<Vec> with = basis;
  with.push_back(v);
  return rank_of(with, dim) == rank_of(basis, dim);
}

}  // namespace

RadicalReport jacobson_radical(const FiniteAlgebra& a) {
  const std::size_t n = a.dim();
  Vec trace(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t m = 0; m < n; ++m)
      for (const auto& [idx, c] : a.product(k, m))
        if (idx == m) trace[k] += c;
  Matrix form(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : a.product(i, j)) form(i, j).add_product(c, trace[k]);

  RadicalReport rep;
  rep.basis = row_space(form.nullspace(), n);
  rep.dim = rep.basis.size();

  rep.ideal = true;
  for (const Vec& j : rep.basis)
    for (std::size_t i = 0; i < n && rep.ideal; ++i) {
      Vec e = a.basis_vector(i);
      rep.ideal = in_span(rep.basis, a.multiply(e, j), n) && in_span(rep.basis, a.multiply(j, e), n);
    }

  // J^k spans, until zero or no longer shrinking.
  std::vector<Vec> power = rep.basis;
  rep.nilpotency_index = 1;
  while (!power.empty()) {
    std::vector<Vec> next;
    for (const Vec& p : power)
      for (const Vec& j : rep.basis) next.push_back(a.multiply(p, j));
    next = row_space(next, n);
    ++rep.nilpotency_index;
    if (next.size() == power.size()) break;
    power = std::move(next);
    if (power.empty()) break;
  }
  rep.nilpotent = power.empty() || rep.basis.empty();
  if (rep.basis.empty()) rep.nilpotency_index = 1;
  if (!rep.nilpotent) rep.nilpotency_index = 0;

  rep.homogeneous = true;
  for (const Vec& j : rep.basis) {
    Vec even(n);
    for (std::size_t i = 0; i < n; ++i)
      if (a.parity()[i] == 0) even[i] = j[i];
    if (!in_span(rep.basis, even, n)) rep.homogeneous = false;
  }
  return rep;
}

bool graded_semisimple(const FiniteAlgebra& a) {
  RadicalReport rep = jacobson_radical(a);
  if (!rep.homogeneous) fail(ErrorCode::InhomogeneousRadical, "the radical is not Z2-graded");
  return rep.semisimple();
}

std::string SingularityVerdict::conclusion() const {
  const bool verified = central_verified && koszul_numeric && regular_upto_bound;
  const bool asserted = asserted_as_regular && asserted_gldim;
  if (verified && asserted) return semisimple ? "isolated singularity" : "not an isolated singularity";
  std::string missing;
  auto add = [&](bool ok, const char* what) {
    if (ok) return;
    missing += missing.empty() ? "" : ", ";
    missing += what;
  };
  add(koszul_numeric, "Koszul series check");
  add(regular_upto_bound, "regularity of z");
  add(asserted_as_regular, "AS-regularity of S (assert as-regular)");
  add(asserted_gldim, "gldim S >= 2 (assert gldim>=2)");
  return std::string(semisimple ? "E(theta_z) is semisimple" : "E(theta_z) is not semisimple") +
         "; S/(z) is " + (semisimple ? "" : "not ") + "an isolated singularity provided: " + missing;
}

SingularityVerdict singularity_verdict(const HypersurfaceInput& h, const Limits& limits) {
  SingularityVerdict v;
  CliffordMap theta = theta_from_central(h, limits);
  v.central_verified = true;
  v.theta = theta.values();
  Deformation d = build_deformation(theta, limits);
  v.semisimple = graded_semisimple(d.algebra);
  v.radical_dim = jacobson_radical(d.algebra).dim;
  v.koszul_degree = d.top_degree + 2;
  v.koszul_numeric = koszul_numeric_check(h.ambient, v.koszul_degree, limits).pass;
  v.regularity_bound = 2 * d.top_degree + 2;
  v.regular_upto_bound = regular_upto(h.ambient, h.z, v.regularity_bound, limits).regular();
  v.asserted_koszul = h.asserted_koszul;
  v.asserted_as_regular = h.asserted_as_regular;
  v.asserted_gldim = h.asserted_gldim;
  return v;
}

FiniteAlgebra even_part_algebra(const FiniteAlgebra& a) {
  Z2Split split = z2_components(a);
  std::vector<std::size_t> to_even(a.dim(), SIZE_MAX);
  for (std::size_t i = 0; i < split.even; ++i) to_even[split.even_basis[i]] = i;
  std::vector<std::string> labels;
  std::vector<std::size_t> degrees;
  for (std::size_t i : split.even_basis) {
    labels.push_back(a.labels()[i]);
    if (a.degrees()) degrees.push_back((*a.degrees())[i]);
  }
  std::vector<SparseCoords> table;
  for (std::size_t i : split.even_basis)
    for (std::size_t j : split.even_basis) {
      SparseCoords out;
      for (const auto& [k, c] : a.product(i, j)) {
        if (to_even[k] == SIZE_MAX) fail(ErrorCode::CertificateFailure, "even product with an odd component");
        out.emplace_back(to_even[k], c);
      }
      table.push_back(std::move(out));
    }
  Vec unit(split.even);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!a.unit()[i].is_zero()) {
      if (to_even[i] == SIZE_MAX) fail(ErrorCode::CertificateFailure, "unit is not even");
      unit[to_even[i]] = a.unit()[i];
    }
  FiniteAlgebra out(a.field(), std::move(labels), std::vector<int>(split.even, 0), std::move(table), std::move(unit));
  if (a.degrees()) out.set_degrees(std::move(degrees));
  return out;
}

HypersurfaceDualData hypersurface_dual_data(const HypersurfaceInput& h, const Limits& limits,
                                            const std::vector<Tensor>* complement) {
  h.validate(limits);
  const QuadraticPresentation& s = h.ambient;
  const Field field = s.field();
  const std::size_t d = s.num_generators();
  Tensor r0 = canonical_lift(s, h.z, limits);
  std::vector<Tensor> rels = s.relations().basis();
  rels.push_back(r0);
  QuadraticPresentation a(field, s.generators(), rels);

  std::vector<Tensor> comp;
  if (complement) {
    comp = *complement;
  } else {
    for (const Word& w : a.relations().non_pivots()) comp.push_back(Tensor::monomial(field, w));
  }
  // Solve f(r0) = 1, f(R) = 0, f(complement) = 0 for f over all words of length 2.
  const auto words = all_words(d, 2);
  std::vector<Vec> rows;
  Vec rhs;
  auto add_row = [&](const Tensor& t, Scalar value) {
    Vec row(words.size());
    for (const auto& [w, c] : t.terms())
      row[std::lower_bound(words.begin(), words.end(), w) - words.begin()] = c;
    rows.push_back(std::move(row));
    rhs.push_back(std::move(value));
  };
  add_row(r0, Scalar(1));
  for (const Tensor& r : s.relations().basis()) add_row(r, Scalar(0));
  for (const Tensor& c : comp) add_row(c, Scalar(0));
  Matrix m = Matrix::from_rows(rows, words.size());
  if (rows.size() != words.size() || m.rank() != words.size())
    fail(ErrorCode::DimensionMismatch, "the complement is not complementary to R + k r0");
  Vec f = *m.solve(rhs);
  std::vector<Tensor::Term> fterms;
  for (std::size_t i = 0; i < words.size(); ++i)
    if (!f[i].is_zero()) fterms.emplace_back(words[i], f[i]);
  Tensor r0_star = Tensor::from_terms(field, 2, std::move(fterms));

  QuadraticPresentation a_dual = quadratic_dual(a);
  SliceTower tower(a_dual, 3, limits);
  Vec w = tower.reduce(r0_star);
  if (is_zero(w)) fail(ErrorCode::CertificateFailure, "w vanishes in the dual algebra");
  if (!is_central_degree2(tower, w)) fail(ErrorCode::WNotCentral, "w is not central in the dual algebra");

  CliffordMap theta = theta_from_lift(s, r0);
  std::vector<Tensor> quotient_rels = a_dual.relations().basis();
  quotient_rels.push_back(r0_star);
  if (!(echelonize(field, d, 2, quotient_rels) == theta.presentation().relations()))
    fail(ErrorCode::CertificateFailure, "A^!/(w) does not match S^!");
  Tensor w_lift = tower.lift(w, 2);
  QuadraticPresentation e = theta.presentation();
  return HypersurfaceDualData{std::move(a), std::move(a_dual), std::move(r0),          std::move(r0_star),
                              std::move(w), std::move(w_lift), std::move(e),          std::move(theta)};
}

CornerCrosscheck localization_corner_crosscheck(const QuadraticPresentation& b, const Tensor& w,
                                                const Limits& limits) {
  if (w.degree() != 2) fail(ErrorCode::DegreeError, "the localized element must have degree 2");
  const Field field = b.field();
  Tensor r0(field, 2);
  {
    SliceTower t3(b, 3, limits);
    Vec wc = t3.reduce(w);
    if (is_zero(wc)) fail(ErrorCode::ZeroElement, "the element vanishes in degree 2");
    if (!is_central_degree2(t3, wc)) fail(ErrorCode::NotCentral, "the element is not central");
    r0 = t3.lift(wc, 2);
  }
  std::vector<Tensor> rels = b.relations().basis();
  rels.push_back(r0);
  QuadraticPresentation e(field, b.generators(), rels);
  // θ(e_j) = coefficient of r0 when e_j is written in R_B ⊕ k r0.
  const Word& lead = r0.leading_word();
  const Scalar lead_coef = r0.coefficient(lead);
  Vec theta;
  for (const Tensor& ej : e.relations().basis()) theta.push_back(b.relations().reduce(ej).coefficient(lead) / lead_coef);

  CornerCrosscheck out;
  out.theta = theta;
  Deformation def = build_deformation(CliffordMap(e, theta), limits);
  out.top_degree = def.top_degree;
  FiniteAlgebra even = even_part_algebra(def.algebra);

  const std::size_t m0 = (def.top_degree + 2) / 2;  // smallest m with 2m >= n+1
  for (std::size_t attempt = 0, m = m0; attempt < 4; ++attempt, m *= 2) {
    SliceTower tower(b, 4 * m, limits);
    Vec wc = tower.reduce(r0);
    // w· : B_{2k} -> B_{2k+2}; injective below 2m (regularity) and bijective from 2m to 4m.
    auto times_w = [&](std::size_t k) {
      std::vector<Vec> cols;
      for (std::size_t i = 0; i < tower.dim(k); ++i) {
        Vec e_i(tower.dim(k));
        e_i[i] = Scalar(1);
        cols.push_back(tower.multiply(wc, 2, e_i, k));
      }
      return Matrix::from_columns(cols, tower.dim(k + 2));
    };
    for (std::size_t k = 0; k < 2 * m; ++k) {
      if (times_w(k).rank() != tower.dim(k))
        fail(ErrorCode::NotRegular, "multiplication by w is not injective in degree " + std::to_string(k));
    }
    bool stable = true;
    for (std::size_t k = 2 * m; k < 4 * m && stable; k += 2) {
      if (tower.dim(k) != tower.dim(k + 2) || times_w(k).rank() != tower.dim(k)) stable = false;
    }
    if (!stable) continue;

    // w^m and multiplication by it from B_{2m} to B_{4m}.
    Vec wm = tower.reduce(Tensor::monomial(field, Word{}));
    for (std::size_t i = 0; i < m; ++i) wm = tower.multiply(wc, 2, wm, 2 * i);
    const std::size_t n = tower.dim(2 * m);
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < n; ++i) {
      Vec e_i(n);
      e_i[i] = Scalar(1);
      cols.push_back(tower.multiply(wm, 2 * m, e_i, 2 * m));
    }
    Matrix shift = Matrix::from_columns(cols, tower.dim(4 * m));
    std::vector<SparseCoords> table;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec ei(n), ej(n);
        ei[i] = Scalar(1);
        ej[j] = Scalar(1);
        auto c = shift.solve(tower.multiply(ei, 2 * m, ej, 2 * m));
        if (!c) fail(ErrorCode::NotStabilized, "product outside the image of w^m");
        SparseCoords sc;
        for (std::size_t k = 0; k < n; ++k)
          if (!(*c)[k].is_zero()) sc.emplace_back(k, (*c)[k]);
        table.push_back(std::move(sc));
      }
    std::vector<std::string> labels;
    for (const Word& word : tower.slice(2 * m).basis) labels.push_back(word.to_string(b.generators()));
    FiniteAlgebra local(field, std::move(labels), std::vector<int>(n, 0), std::move(table), wm);

    // b w^{-m} ↦ image of the word b in E(θ), restricted to the even part.
    Z2Split split = z2_components(def.algebra);
    std::vector<Vec> images;
    for (const Word& word : tower.slice(2 * m).basis) {
      Vec full = def.word_image(word);
      Vec ev;
      for (std::size_t i : split.even_basis) ev.push_back(full[i]);
      images.push_back(std::move(ev));
    }
    out.m = m;
    out.dim = n;
    out.certificate = check_homomorphism(local, even, Matrix::from_columns(images, split.even));
    return out;
  }
  fail(ErrorCode::NotStabilized, "multiplication by w did not stabilize after 4 attempts");
}

}  // namespace qforge

#include "qforge/extensions.hpp"

#include <algorithm>

#include "qforge/error.hpp"

namespace qforge {

namespace {

Vec scaled(const Vec& v, const Scalar& c) {
  Vec out = v;
  for (auto& x : out) x *= c;
  return out;
}

// Relations of the extension in the order R basis, x*v + v*x, v*v.
std::vector<Tensor> extension_relations(const QuadraticPresentation& e) {
  const Field f = e.field();
  const auto v = static_cast<Letter>(e.num_generators());
  std::vector<Tensor> rels = e.relations().basis();
  for (Letter x = 0; x < v; ++x)
    rels.push_back(Tensor::from_terms(f, 2, {{Word{x, v}, Scalar(1)}, {Word{v, x}, Scalar(1)}}));
  rels.push_back(Tensor::monomial(f, Word{v, v}));
  return rels;
}

}  // namespace

std::string fresh_generator(const std::vector<std::string>& names) {
  for (std::size_t k = 1;; ++k) {
    std::string candidate = "v" + std::to_string(k);
    if (std::find(names.begin(), names.end(), candidate) == names.end()) return candidate;
    if (k > names.size() + 1) fail(ErrorCode::NameClash, "no fresh generator name available");
  }
}

QuadraticPresentation trivial_extension(const QuadraticPresentation& e) {
  auto names = e.generators();
  names.push_back(fresh_generator(names));
  return QuadraticPresentation(e.field(), names, extension_relations(e));
}

CliffordMap extend_clifford_map(const CliffordMap& theta) {
  const auto& e = theta.presentation();
  QuadraticPresentation ext = trivial_extension(e);
  Vec values = theta.values();
  values.resize(values.size() + e.num_generators(), Scalar(0));
  values.push_back(Scalar(1));
  return CliffordMap(ext, theta_from_listed(ext, extension_relations(e), values));
}

FiniteAlgebra group_algebra_Z2(Field field) {
  // 1·1 = 1, 1·a = a, a·1 = a, a·a = 1
  std::vector<SparseCoords> table = {{{0, Scalar(1)}}, {{1, Scalar(1)}}, {{1, Scalar(1)}}, {{0, Scalar(1)}}};
  return FiniteAlgebra(field, {"1", "a"}, {0, 1}, std::move(table), {Scalar(1), Scalar(0)});
}

FiniteAlgebra matrix_algebra_M2(Field field) {
  // E_ij E_kl = δ_jk E_il, index of E_ij = 2i + j.
  std::vector<SparseCoords> table(16);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t l = 0; l < 2; ++l) table[(2 * i + j) * 4 + (2 * j + l)] = {{2 * i + l, Scalar(1)}};
  return FiniteAlgebra(field, {"E11", "E12", "E21", "E22"}, {0, 1, 1, 0}, std::move(table),
                       {Scalar(1), Scalar(0), Scalar(0), Scalar(1)});
}

FiniteAlgebra twisted_tensor(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.field() != b.field()) fail(ErrorCode::MixedField, "twisted tensor of algebras over different fields");
  const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
  std::vector<std::string> labels;
  std::vector<int> parity;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      labels.push_back(a.labels()[i] + "|" + b.labels()[j]);
      parity.push_back((a.parity()[i] + b.parity()[j]) % 2);
    }
  std::vector<SparseCoords> table(n * n);
  for (std::size_t i1 = 0; i1 < na; ++i1)
    for (std::size_t j1 = 0; j1 < nb; ++j1)
      for (std::size_t i2 = 0; i2 < na; ++i2)
        for (std::size_t j2 = 0; j2 < nb; ++j2) {
          const bool negative = b.parity()[j1] && a.parity()[i2];
          SparseCoords& out = table[(i1 * nb + j1) * n + (i2 * nb + j2)];
          for (const auto& [k, ca] : a.product(i1, i2))
            for (const auto& [l, cb] : b.product(j1, j2)) out.emplace_back(k * nb + l, negative ? -(ca * cb) : ca * cb);
          std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        }
  Vec unit(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) unit[i * nb + j] = a.unit()[i] * b.unit()[j];
  return FiniteAlgebra(a.field(), std::move(labels), std::move(parity), std::move(table), std::move(unit));
}

IsoCertificate upsilon_iso_check(Field field) {
  if (!field_has_i(field)) fail(ErrorCode::FieldLacksI, "the map to M2 needs sqrt(-1); use field Qi");
  FiniteAlgebra cg = group_algebra_Z2(field);
  FiniteAlgebra source = twisted_tensor(cg, cg);
  FiniteAlgebra m2 = matrix_algebra_M2(field);
  const Scalar i = Scalar::i();
  // Columns: 1|1, 1|a, a|1, a|a in the basis E11, E12, E21, E22.
  Matrix map = Matrix::from_columns({{Scalar(1), Scalar(0), Scalar(0), Scalar(1)},
                                     {Scalar(0), Scalar(1), Scalar(1), Scalar(0)},
                                     {Scalar(0), i, -i, Scalar(0)},
                                     {i, Scalar(0), Scalar(0), -i}},
                                    4);
  return check_homomorphism(source, m2, map);
}

Matrix induced_map(const Deformation& source, const FiniteAlgebra& target, const std::vector<Vec>& generator_images) {
  const auto& p = source.presentation;
  if (generator_images.size() != p.num_generators())
    fail(ErrorCode::DimensionMismatch, "one image per generator expected");
  auto image_of = [&](const Word& w) {
    Vec v = target.unit();
    for (Letter x : w.letters()) v = target.multiply(v, generator_images[x]);
    return v;
  };
  for (std::size_t j = 0; j < p.relations().dim(); ++j) {
    const Tensor& r = p.relations().basis()[j];
    Vec acc = scaled(target.unit(), -source.theta[j]);
    for (const auto& [w, c] : r.terms()) {
      Vec iw = image_of(w);
      for (std::size_t k = 0; k < acc.size(); ++k) acc[k].add_product(c, iw[k]);
    }
    if (!is_zero(acc))
      fail(ErrorCode::RelationNotKilled, "relation " + r.to_string(p.generators()) + " does not map to theta(r)");
  }
  std::vector<Vec> cols;
  for (const Word& w : source.words) cols.push_back(image_of(w));
  return Matrix::from_columns(cols, target.dim());
}

TildeIso tilde_iso_check(const CliffordMap& theta, const Limits& limits) {
  Deformation base = build_deformation(theta, limits);
  Deformation extended = build_deformation(extend_clifford_map(theta), limits);
  FiniteAlgebra cg = group_algebra_Z2(theta.presentation().field());
  FiniteAlgebra target = twisted_tensor(base.algebra, cg);
  // x ↦ x ⊗̂ 1 (index 2·i), v ↦ 1 ⊗̂ a (index 1).
  std::vector<Vec> images;
  for (Letter x = 0; x < theta.presentation().num_generators(); ++x) {
    auto it = std::find(base.words.begin(), base.words.end(), Word{x});
    Vec v(target.dim());
    if (it != base.words.end()) v[static_cast<std::size_t>(it - base.words.begin()) * 2] = Scalar(1);
    images.push_back(std::move(v));
  }
  Vec alpha(target.dim());
  alpha[1] = Scalar(1);
  images.push_back(std::move(alpha));
  Matrix map = induced_map(extended, target, images);
  IsoCertificate cert = check_homomorphism(extended.algebra, target, map);
  return TildeIso{std::move(extended), std::move(base), std::move(target), std::move(cert)};
}

DoubleCover double_branched_cover_dual(const HypersurfaceInput& h, int times, const Limits& limits) {
  if (times != 1 && times != 2) fail(ErrorCode::UsageError, "times must be 1 or 2");
  CliffordMap theta_z = theta_from_central(h, limits);
  HypersurfaceInput cover = h;
  CliffordMap extended = theta_z;
  for (int t = 0; t < times; ++t) {
    const QuadraticPresentation& s = cover.ambient;
    const Field f = s.field();
    auto names = s.generators();
    names.push_back(fresh_generator(names));
    const auto v = static_cast<Letter>(s.num_generators());
    std::vector<Tensor> rels = s.relations().basis();
    for (Letter x = 0; x < v; ++x)
      rels.push_back(Tensor::from_terms(f, 2, {{Word{x, v}, Scalar(1)}, {Word{v, x}, Scalar(-1)}}));
    Tensor z = Tensor::from_terms(f, 2, cover.z.terms()) + Tensor::monomial(f, Word{v, v});
    cover = HypersurfaceInput{QuadraticPresentation(f, names, rels), z, h.asserted_koszul, h.asserted_as_regular,
                              h.asserted_gldim};
    extended = extend_clifford_map(extended);
  }
  CliffordMap theta_cover = theta_from_central(cover, limits);
  const bool rel_agree = theta_cover.presentation().relations() == extended.presentation().relations();
  const bool th_agree = rel_agree && theta_cover.values() == extended.values();
  return DoubleCover{std::move(cover), std::move(theta_cover), std::move(extended), rel_agree, th_agree};
}

KnorrerWitness knorrer_corner_witness(const CliffordMap& theta, const Limits& limits) {
  const Field field = theta.presentation().field();
  if (!field_has_i(field)) fail(ErrorCode::FieldLacksI, "the Knorrer witness needs sqrt(-1); use field Qi");
  CliffordMap theta1 = extend_clifford_map(theta);
  TildeIso first = tilde_iso_check(theta, limits);    // D1 → D ⊗̂ CG
  TildeIso second = tilde_iso_check(theta1, limits);  // D2 → D1 ⊗̂ CG
  if (!first.certificate.valid() || !second.certificate.valid())
    fail(ErrorCode::CertificateFailure, "an extension isomorphism failed");
  const FiniteAlgebra& d = first.base.algebra;
  const FiniteAlgebra& d2 = second.extended.algebra;
  const std::size_t n = d.dim(), n1 = first.extended.algebra.dim(), n2 = d2.dim();

  // Target D ⊗̂ M2, index a*4 + m.
  FiniteAlgebra target = twisted_tensor(d, matrix_algebra_M2(field));
  IsoCertificate ups = upsilon_iso_check(field);
  // (D ⊗̂ CG) ⊗̂ CG → D ⊗̂ (CG ⊗̂ CG) → D ⊗̂ M2 on basis ((a, g1), g2).
  auto to_target = [&](std::size_t a, std::size_t g1, std::size_t g2) {
    Vec out(target.dim());
    Vec col = ups.map.column(g1 * 2 + g2);
    for (std::size_t m = 0; m < 4; ++m) out[a * 4 + m] = col[m];
    return out;
  };
  std::vector<Vec> cols;
  for (std::size_t b = 0; b < n2; ++b) {
    Vec out(target.dim());
    Vec in_d1cg = second.certificate.map.column(b);  // over D1 ⊗̂ CG, index k*2 + g2
    for (std::size_t k = 0; k < n1; ++k)
      for (std::size_t g2 = 0; g2 < 2; ++g2) {
        const Scalar& c = in_d1cg[k * 2 + g2];
        if (c.is_zero()) continue;
        Vec in_dcg = first.certificate.map.column(k);  // over D ⊗̂ CG, index a*2 + g1
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t g1 = 0; g1 < 2; ++g1) {
            const Scalar& c2 = in_dcg[a * 2 + g1];
            if (c2.is_zero()) continue;
            Vec t = to_target(a, g1, g2);
            Scalar cc = c * c2;
            for (std::size_t q = 0; q < t.size(); ++q) out[q].add_product(cc, t[q]);
          }
      }
    cols.push_back(std::move(out));
  }
  KnorrerWitness w;
  w.base_dim = n;
  w.ambient_dim = n2;
  w.chi = check_homomorphism(d2, target, Matrix::from_columns(cols, target.dim()));
  if (!w.chi.valid()) return w;
  Matrix inv = *w.chi.map.inverse();

  auto lift = [&](const Vec& a, std::size_t m) {
    Vec t(target.dim());
    for (std::size_t i = 0; i < n; ++i) t[i * 4 + m] = a[i];
    return inv.apply(t);
  };
  w.idempotent = lift(d.unit(), 0);  // χ⁻¹(1 ⊗̂ E11)
  const Vec& e = w.idempotent;
  w.idempotent_even = d2.parity_of(e) == 0;
  w.idempotent_ok = d2.multiply(e, e) == e && !is_zero(e) && e != d2.unit();

  // Corner e D2 e and the map a ↦ χ⁻¹(a ⊗̂ E11).
  std::vector<Vec> corner_span;
  for (std::size_t b = 0; b < n2; ++b) corner_span.push_back(d2.multiply(e, d2.multiply(d2.basis_vector(b), e)));
  w.corner_dim = rank_of(corner_span, n2);
  std::vector<Vec> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(lift(d.basis_vector(i), 0));
  IsoCertificate& c = w.corner;
  c.map = Matrix::from_columns(images, n2);
  c.unital = c.map.apply(d.unit()) == e;
  c.multiplicative = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ++c.pairs_checked;
      if (c.map.apply(d.multiply(d.basis_vector(i), d.basis_vector(j))) != d2.multiply(images[i], images[j]))
        c.multiplicative = false;
    }
  bool inside = true;
  for (const Vec& img : images) inside = inside && d2.multiply(e, d2.multiply(img, e)) == img;
  c.bijective = inside && c.map.rank() == n && w.corner_dim == n;

  std::vector<Vec> ideal;
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = 0; j < n2; ++j)
      ideal.push_back(d2.multiply(d2.basis_vector(i), d2.multiply(e, d2.basis_vector(j))));
  w.full = rank_of(ideal, n2) == n2;
  return w;
}

SemisimpleTransfer knorrer_semisimple_transfer(const CliffordMap& theta, const Limits& limits) {
  SemisimpleTransfer t;
  Deformation base = build_deformation(theta, limits);
  Deformation ext = build_deformation(extend_clifford_map(theta), limits);
  t.base_semisimple = graded_semisimple(base.algebra);
  t.extended_semisimple = graded_semisimple(ext.algebra);
  if (theta.is_zero()) {
    t.gate_reason = "theta = 0 corresponds to z = 0, which is not a regular element";
    return t;
  }
  // θ as an element of E^!_2 must be regular there (it is central by the correspondence).
  const auto& e = theta.presentation();
  QuadraticPresentation dual = quadratic_dual(e);
  std::size_t bound = 2 * base.top_degree + 2;
  RegularityReport reg = regular_upto(dual, extend_functional(e, theta.values()), bound, limits);
  if (!reg.regular()) {
    t.gate_reason = "theta is not regular in the dual algebra (degree " + std::to_string(*reg.first_failure) + ")";
    return t;
  }
  t.in_hypothesis = true;
  return t;
}

}  // namespace qforge

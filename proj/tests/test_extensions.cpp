#include <doctest.h>

#include "qforge/error.hpp"
#include "qforge/extensions.hpp"
#include "test_helpers.hpp"

using namespace qforge;
using namespace qforge::testing;

namespace {

CliffordMap listed_map(const PresentationFile& f, const Vec& values) {
  auto p = f.presentation();
  return CliffordMap(p, theta_from_listed(p, f.relations, values));
}

// Product of basis elements i, j of a twisted tensor by the sign rule, written
// out independently of the implementation's loop order.
Vec sign_rule(const FiniteAlgebra& a, const FiniteAlgebra& b, std::size_t i1, std::size_t j1, std::size_t i2,
              std::size_t j2) {
  Vec pa = a.multiply(a.basis_vector(i1), a.basis_vector(i2));
  Vec pb = b.multiply(b.basis_vector(j1), b.basis_vector(j2));
  Vec out(a.dim() * b.dim());
  for (std::size_t k = 0; k < a.dim(); ++k)
    for (std::size_t l = 0; l < b.dim(); ++l) out[k * b.dim() + l] = pa[k] * pb[l];
  if (b.parity()[j1] * a.parity()[i2] == 1)
    for (auto& c : out) c = -c;
  return out;
}

const auto kTx = pres("x", "x*x", "Qi");

}  // namespace

TEST_CASE("trivial extensions") {
  auto ext = trivial_extension(pres("x", "x*x"));
  CHECK(ext.generators() == std::vector<std::string>{"x", "v1"});
  CHECK(ext.relations() == pres("x, v1", "x*x; x*v1 + v1*x; v1*v1").relations());
  auto e2 = trivial_extension(pres("x, y", kExt2Rels));
  CHECK(hilbert_series(e2, 4) == std::vector<std::size_t>{1, 3, 3, 1, 0});
  auto e3 = trivial_extension(e2);
  CHECK(e3.generators().back() == "v2");
  auto h = hilbert_series(e3, 5);
  std::size_t total = 0;
  for (auto k : h) total += k;
  CHECK(total == 16);
  CHECK(top_degree(e3) == 4);
}

TEST_CASE("extended Clifford maps") {
  auto t = extend_clifford_map(CliffordMap::zero(pres("x", "x*x")));
  // Listed order x*x, x*v1 + v1*x, v1*v1 → values 0, 0, 1.
  auto listed = pres("x, v1", "x*x; x*v1 + v1*x; v1*v1");
  CHECK(theta_on_listed(t.presentation(), listed.relations().basis(), t.values()) == ints({0, 0, 1}));
  auto f = file("x, y", kExt2Rels);
  auto te = extend_clifford_map(listed_map(f, ints({1, 1, 0})));
  auto ef = file("x, y, v1", "x*x; y*y; x*y + y*x; x*v1 + v1*x; y*v1 + v1*y; v1*v1");
  CHECK(theta_on_listed(te.presentation(), ef.relations, te.values()) == ints({1, 1, 0, 0, 0, 1}));
  for (const auto& p : {pres("x, y", kExt2Rels), pres("x, y, z", kS2Rels), pres("x, y", kEx24Rels)})
    for (const Vec& theta : clifford_map_space(p)) {
      auto ext = extend_clifford_map(CliffordMap(p, theta));
      CHECK(clifford_condition(ext.presentation(), ext.values()).holds);
    }
}

TEST_CASE("group algebra and twisted tensors") {
  auto cg = group_algebra_Z2(Field::Rationals);
  CHECK(cg.dim() == 2);
  CHECK(cg.multiply(cg.basis_vector(1), cg.basis_vector(1)) == cg.unit());
  CHECK(cg.is_associative());
  auto t = twisted_tensor(cg, cg);
  CHECK(t.dim() == 4);
  // labels 1|1, 1|a, a|1, a|a
  Vec a1 = t.basis_vector(2), one_a = t.basis_vector(1), aa = t.basis_vector(3);
  CHECK(t.multiply(a1, one_a) == aa);
  Vec neg = aa;
  for (auto& c : neg) c = -c;
  CHECK(t.multiply(one_a, a1) == neg);
  Vec minus_one = t.unit();
  for (auto& c : minus_one) c = -c;
  CHECK(t.multiply(aa, aa) == minus_one);
  CHECK(t.is_associative());
  CHECK(t.is_parity_homogeneous());
  // Field as the unit factor.
  FiniteAlgebra k(Field::Rationals, {"1"}, {0}, {{{0, Scalar(1)}}}, {Scalar(1)});
  auto kb = twisted_tensor(k, cg);
  CHECK(kb.dim() == 2);
  CHECK(kb.multiply(kb.basis_vector(1), kb.basis_vector(1)) == kb.unit());
  CHECK_THROWS_AS(twisted_tensor(cg, group_algebra_Z2(Field::GaussianRationals)), Error);
}

TEST_CASE("property: twisted tensor sign rule and associativity") {
  auto f = file("x, y", kExt2Rels);
  std::vector<FiniteAlgebra> algs = {group_algebra_Z2(Field::Rationals), matrix_algebra_M2(Field::Rationals),
                                     build_deformation(listed_map(f, ints({1, 0, 0}))).algebra,
                                     build_deformation(CliffordMap::zero(f.presentation())).algebra};
  for (const auto& a : algs)
    for (const auto& b : algs) {
      if (a.dim() * b.dim() > 16) continue;
      auto t = twisted_tensor(a, b);
      CHECK(t.is_associative());
      CHECK(t.is_unital());
      for (std::size_t i1 = 0; i1 < a.dim(); ++i1)
        for (std::size_t j1 = 0; j1 < b.dim(); ++j1) {
          CHECK(t.parity()[i1 * b.dim() + j1] == (a.parity()[i1] + b.parity()[j1]) % 2);
          for (std::size_t i2 = 0; i2 < a.dim(); ++i2)
            for (std::size_t j2 = 0; j2 < b.dim(); ++j2)
              CHECK(t.multiply(t.basis_vector(i1 * b.dim() + j1), t.basis_vector(i2 * b.dim() + j2)) ==
                    sign_rule(a, b, i1, j1, i2, j2));
        }
    }
}

TEST_CASE("the map to 2x2 matrices") {
  auto cert = upsilon_iso_check(Field::GaussianRationals);
  CHECK(cert.valid());
  CHECK(cert.pairs_checked == 16);
  CHECK(cert.map.column(0) == Vec{Scalar(1), Scalar(0), Scalar(0), Scalar(1)});
  // Υ(a|a)^2 = diag(-1, -1).
  auto m2 = matrix_algebra_M2(Field::GaussianRationals);
  Vec img = cert.map.column(3);
  CHECK(m2.multiply(img, img) == Vec{Scalar(-1), Scalar(0), Scalar(0), Scalar(-1)});
  try {
    upsilon_iso_check(Field::Rationals);
    FAIL("expected FieldLacksI");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldLacksI);
  }
}

TEST_CASE("extension isomorphism certificates") {
  auto small = tilde_iso_check(CliffordMap::zero(kTx));
  CHECK(small.certificate.valid());
  CHECK(small.extended.algebra.dim() == 4);
  auto f = file("x, y", kExt2Rels);
  auto big = tilde_iso_check(listed_map(f, ints({1, 1, 0})));
  CHECK(big.certificate.valid());
  CHECK(big.extended.algebra.dim() == 8);
  for (const auto& p : {pres("x, y", kExt2Rels), pres("x, y, z", kS2Rels), pres("x, y", kEx24Rels)})
    for (const Vec& theta : clifford_map_space(p)) CHECK(tilde_iso_check(CliffordMap(p, theta)).certificate.valid());
}

TEST_CASE("a wrong generator assignment is rejected") {
  auto f = file("x, y", kExt2Rels);
  auto d = build_deformation(listed_map(f, ints({1, 1, 0})));
  // Both generators to x: x*y + y*x maps to 2*x*x = 2, but theta is 0 there.
  Vec x = d.algebra.basis_vector(1);
  try {
    induced_map(d, d.algebra, {x, x});
    FAIL("expected RelationNotKilled");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RelationNotKilled);
  }
}

TEST_CASE("double branched covers on the dual side") {
  auto s = pres("x, y", "x*y - y*x");
  HypersurfaceInput h{s, poly(s, "x*x + y*y")};
  auto once = double_branched_cover_dual(h, 1);
  CHECK(once.cover.z == poly(once.cover.ambient, "x*x + y*y + v1*v1"));
  CHECK(once.relations_agree);
  CHECK(once.theta_agree);
  once.cover.validate();
  auto twice = double_branched_cover_dual(h, 2);
  CHECK(twice.cover.ambient.generators() == std::vector<std::string>{"x", "y", "v1", "v2"});
  CHECK(twice.theta_agree);
  for (const char* z : {"x*x", "x*y"}) CHECK(double_branched_cover_dual(HypersurfaceInput{s, poly(s, z)}, 1).theta_agree);
}

TEST_CASE("Knorrer corner witness") {
  auto small = knorrer_corner_witness(CliffordMap::zero(kTx));
  CHECK(small.pass());
  CHECK(small.base_dim == 2);
  CHECK(small.ambient_dim == 8);
  CHECK(small.corner_dim == 2);
  auto f = file("x, y", kExt2Rels, "Qi");
  auto big = knorrer_corner_witness(listed_map(f, ints({1, 1, 0})));
  CHECK(big.pass());
  CHECK(big.ambient_dim == 16);
  CHECK(big.corner.pairs_checked == 16);
  CHECK_THROWS_AS(knorrer_corner_witness(CliffordMap::zero(pres("x", "x*x"))), Error);
}

TEST_CASE("semisimplicity transfer") {
  auto f = file("x, y", kExt2Rels);
  auto ss = knorrer_semisimple_transfer(listed_map(f, ints({1, 1, 0})));
  CHECK(ss.in_hypothesis);
  CHECK(ss.base_semisimple);
  CHECK(ss.extended_semisimple);
  CHECK(ss.pass());
  auto deg = knorrer_semisimple_transfer(listed_map(f, ints({1, 0, 0})));
  CHECK(deg.in_hypothesis);
  CHECK(!deg.base_semisimple);
  CHECK(!deg.extended_semisimple);
  CHECK(deg.pass());
  auto zero = knorrer_semisimple_transfer(CliffordMap::zero(f.presentation()));
  CHECK(!zero.in_hypothesis);
  CHECK(!zero.gate_reason.empty());
  CHECK(zero.pass());
}

#include <doctest.h>

#include "qforge/deform.hpp"
#include "qforge/error.hpp"
#include "test_helpers.hpp"

using namespace qforge;
using namespace qforge::testing;

namespace {

CliffordMap listed_map(const PresentationFile& f, const Vec& values) {
  auto p = f.presentation();
  return CliffordMap(p, theta_from_listed(p, f.relations, values));
}

std::size_t index_of(const Deformation& d, const Word& w) {
  auto it = std::find(d.words.begin(), d.words.end(), w);
  REQUIRE(it != d.words.end());
  return static_cast<std::size_t>(it - d.words.begin());
}

Vec word_vec(const Deformation& d, const Word& w) { return d.algebra.basis_vector(index_of(d, w)); }

// Invariants every built deformation must satisfy.
void check_invariants(const Deformation& d) {
  const auto& a = d.algebra;
  CHECK(a.is_associative());
  CHECK(a.is_unital());
  CHECK(a.is_parity_homogeneous());
  // Filtration: the degree-(i+j) part of a product is the product in E.
  SliceTower tower(d.presentation, d.top_degree);
  const auto& deg = *a.degrees();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const std::size_t top = deg[i] + deg[j];
      Vec graded(top <= d.top_degree ? tower.dim(top) : 0);
      for (const auto& [k, c] : a.product(i, j)) {
        CHECK(deg[k] <= top);
        if (deg[k] == top) graded[*tower.slice(top).index_of(d.words[k])] = c;
      }
      if (top <= d.top_degree) CHECK(graded == tower.reduce_word(d.words[i].concat(d.words[j])));
    }
}

void check_form(const Deformation& d, const BilinearForm& f) {
  const auto& a = d.algebra;
  CHECK(f.parity == static_cast<int>(d.top_degree % 2));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (!f.gram(i, j).is_zero()) CHECK((a.parity()[i] + a.parity()[j]) % 2 == f.parity);
      Vec ab = a.multiply(a.basis_vector(i), a.basis_vector(j));
      for (std::size_t k = 0; k < a.dim(); ++k) {
        Vec bc = a.multiply(a.basis_vector(j), a.basis_vector(k));
        // <ab, c> = <a, bc>: pair coordinates with the Gram matrix.
        Scalar lhs(0), rhs(0);
        for (std::size_t m = 0; m < a.dim(); ++m) {
          lhs.add_product(ab[m], f.gram(m, k));
          rhs.add_product(bc[m], f.gram(i, m));
        }
        CHECK(lhs == rhs);
      }
    }
}

}  // namespace

TEST_CASE("zero deformation is the graded algebra") {
  auto e = pres("x, y, z", kS2Rels);
  auto d = build_deformation(CliffordMap::zero(e));
  CHECK(d.algebra.dim() == 8);
  CHECK(d.graded_dims == std::vector<std::size_t>{1, 3, 3, 1});
  check_invariants(d);
  auto split = z2_components(d.algebra);
  CHECK(split.even == 4);
  CHECK(split.odd == 4);
  CHECK(!strong_grading_check(d.algebra));
}

TEST_CASE("exterior algebra deformed to a Clifford algebra") {
  auto f = file("x, y", kExt2Rels);
  auto d = build_deformation(listed_map(f, ints({1, 1, 0})));
  CHECK(d.algebra.dim() == 4);
  check_invariants(d);
  const Word x{0}, y{1}, xy{0, 1};
  auto mul = [&](const Word& a, const Word& b) { return d.algebra.multiply(word_vec(d, a), word_vec(d, b)); };
  CHECK(mul(x, x) == d.algebra.unit());
  CHECK(mul(y, y) == d.algebra.unit());
  Vec yx = mul(y, x);
  Vec neg_xy = word_vec(d, xy);
  for (auto& c : neg_xy) c = -c;
  CHECK(yx == neg_xy);
  auto form = frobenius_form(d);
  CHECK(form.rank == 4);
  CHECK(form.parity == 0);
  check_form(d, form);
  CHECK(strong_grading_check(d.algebra));
  auto split = z2_components(d.algebra);
  CHECK(split.even == 2);
  CHECK(split.odd == 2);
}

TEST_CASE("Frobenius forms of zero and nonzero deformations") {
  auto ext = pres("x, y", kExt2Rels);
  auto d0 = build_deformation(CliffordMap::zero(ext));
  auto f0 = frobenius_form(d0);
  CHECK(f0.rank == 4);
  CHECK(f0.parity == 0);
  check_form(d0, f0);

  auto s2 = file("x, y, z", kS2Rels);
  auto d = build_deformation(listed_map(s2, ints({0, 0, 1, 1, 1, 1})));
  check_invariants(d);
  auto f = frobenius_form(d);
  CHECK(f.rank == 8);
  CHECK(f.parity == 1);
  check_form(d, f);
  CHECK(strong_grading_check(d.algebra));
  auto split = z2_components(d.algebra);
  CHECK(split.even == 4);
  CHECK(split.odd == 4);
}

TEST_CASE("strong grading with a degenerate Clifford map") {
  auto f = file("x, y", kExt2Rels);
  auto d = build_deformation(listed_map(f, ints({1, 0, 0})));
  CHECK(strong_grading_check(d.algebra));
  check_invariants(d);
  check_form(d, frobenius_form(d));
}

TEST_CASE("PBW check") {
  auto ext = pres("x, y", kExt2Rels);
  for (const Vec& theta : clifford_map_space(ext)) {
    auto rep = pbw_check(ext, theta);
    CHECK(rep.pass());
    CHECK(rep.expected == 4);
  }
  CHECK(pbw_check(ext, Vec(3)).pass());
  auto jf = file("x, y", kJordanRels);
  auto jordan = jf.presentation();
  Vec planted = theta_from_listed(jordan, jf.relations, ints({1, 0, 0}));
  auto rep = pbw_check(jordan, planted);
  CHECK(!rep.pass());
  CHECK(rep.at_n1 < 4);
  try {
    build_deformation_unchecked(jordan, planted);
    FAIL("expected PBWFailure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PBWFailure);
  }
  try {
    CliffordMap(jordan, planted);
    FAIL("expected NotClifford");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotClifford);
  }
}

TEST_CASE("non-Frobenius top degree") {
  auto p = pres("x, y", "x*x; y*y; x*y; y*x");
  auto d = build_deformation(CliffordMap::zero(p));
  try {
    frobenius_form(d);
    FAIL("expected NotFrobeniusTop");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotFrobeniusTop);
  }
}

TEST_CASE("property: every basis Clifford map of the corpus builds and passes PBW") {
  for (auto [gens, rels] : std::vector<std::pair<const char*, const char*>>{
           {"x, y", kExt2Rels}, {"x, y", kEx24Rels}, {"x, y, z", kS2Rels}, {"x", "x*x"}}) {
    auto p = pres(gens, rels);
    for (const Vec& theta : clifford_map_space(p)) {
      CHECK(pbw_check(p, theta).pass());
      auto d = build_deformation(CliffordMap(p, theta));
      check_invariants(d);
      check_form(d, frobenius_form(d));
      CHECK(strong_grading_check(d.algebra));
    }
  }
}

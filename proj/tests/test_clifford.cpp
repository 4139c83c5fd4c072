#include <doctest.h>

#include "qforge/clifford.hpp"
#include "qforge/error.hpp"
#include "test_helpers.hpp"

using namespace qforge;
using namespace qforge::testing;

namespace {

// θ over echelon coordinates from values on the relations as listed.
Vec listed(const PresentationFile& f, const Vec& values) {
  return theta_from_listed(f.presentation(), f.relations, values);
}

// Oracle for the Clifford condition: the deformation T(V)/(r − θ(r)) keeps
// dim 1 + d in filtration degree <= 1 and the full dimension at level 3,
// using brute-force dense elimination on T_{<=3}.
bool brute_pbw_level3(const QuadraticPresentation& p, const Vec& theta) {
  const std::size_t d = p.num_generators();
  std::vector<Word> words;
  for (std::size_t k = 0; k <= 3; ++k)
    for (auto& w : all_words(d, k)) words.push_back(w);
  auto col = [&](const Word& w) { return std::lower_bound(words.begin(), words.end(), w) - words.begin(); };
  std::vector<Vec> rows;
  const auto& basis = p.relations().basis();
  for (std::size_t left = 0; left <= 1; ++left)
    for (std::size_t right = 0; left + right <= 1; ++right)
      for (const Word& u : all_words(d, left))
        for (const Word& v : all_words(d, right))
          for (std::size_t j = 0; j < basis.size(); ++j) {
            Vec row(words.size());
            for (const auto& [w, c] : basis[j].terms()) row[col(u.concat(w).concat(v))] += c;
            row[col(u.concat(v))] -= theta[j];
            rows.push_back(row);
          }
  std::size_t quotient = words.size() - Matrix::from_rows(rows, words.size()).rank();
  auto h = hilbert_series(p, 3);
  return quotient == h[0] + h[1] + h[2] + h[3];
}

}  // namespace

TEST_CASE("overlap dimensions of the worked examples") {
  auto s2 = pres("x, y, z", kS2Rels);
  CHECK(overlap_space(s2).dim() == 10);
  auto jordan = pres("x, y", kJordanRels);
  auto ov = overlap_space(jordan);
  CHECK(ov.dim() == 4);
  CHECK(ov.contains(poly(jordan, "y*y*y")));
  CHECK(ov.contains(poly(jordan, "x*y*y + y*x*y + y*y*x")));
  CHECK(ov.contains(poly(jordan, "2*y*y*x + x*y*x + y*x*x + y*x*y + x*x*y")));
  CHECK(ov.contains(poly(jordan, "x*y*x + x*x*x + 2*y*y*x + 2*y*x*x")));
  auto ext = pres("x, y", kExt2Rels);
  auto ove = overlap_space(ext);
  CHECK(ove.dim() == 4);
  for (const char* w : {"x*x*x", "y*y*y", "x*x*y + x*y*x + y*x*x", "x*y*y + y*x*y + y*y*x"})
    CHECK(ove.contains(poly(ext, w)));
  auto ex24 = pres("x, y", kEx24Rels);
  for (const char* w : {"x*x*x", "y*y*y", "x*x*y - x*y*x + y*x*x", "x*y*y - y*x*y + y*y*x"})
    CHECK(overlap_space(ex24).contains(poly(ex24, w)));
}

TEST_CASE("Clifford condition and spaces") {
  auto jf = file("x, y", kJordanRels);
  auto jordan = jf.presentation();
  auto check = clifford_condition(jordan, listed(jf, ints({1, 0, 0})));
  CHECK(!check.holds);
  CHECK(!check.violated.empty());
  CHECK(clifford_condition(jordan, Vec(3)).holds);
  CHECK(clifford_map_space(jordan).empty());
  CHECK_THROWS_AS(clifford_condition(jordan, Vec(2)), Error);

  auto ext = pres("x, y", kExt2Rels);
  CHECK(clifford_map_space(ext).size() == 3);
  CHECK(clifford_condition(ext, ints({3, -7, 5})).holds);

  auto ef = file("x, y", kEx24Rels);
  auto space = clifford_map_space(ef.presentation());
  CHECK(space.size() >= 2);
  // The (a, b, 0) family lies in the space.
  for (const Vec& ab : {ints({1, 0, 0}), ints({0, 1, 0}), ints({2, -3, 0})}) {
    Vec theta = listed(ef, ab);
    CHECK(clifford_condition(ef.presentation(), theta).holds);
    std::vector<Vec> with = space;
    with.push_back(theta);
    CHECK(row_space(with, 3) == space);
  }
  CHECK(space.size() == 2);
}

TEST_CASE("property: Clifford space agrees with pointwise checks and a brute-force PBW oracle") {
  std::vector<QuadraticPresentation> ps = {pres("x, y", kExt2Rels), pres("x, y", kJordanRels),
                                           pres("x, y", kEx24Rels), pres("x, y, z", kS2Rels),
                                           pres("x, y", "x*y; y*x"), pres("x, y", "x*x")};
  for (const auto& p : ps) {
    auto space = clifford_map_space(p);
    const std::size_t r = p.relations().dim();
    for (const Vec& theta : space) {
      CHECK(clifford_condition(p, theta).holds);
      CHECK(brute_pbw_level3(p, theta));
    }
    // Unit vectors: the pointwise check and membership in the space agree.
    for (std::size_t j = 0; j < r; ++j) {
      Vec e(r);
      e[j] = Scalar(1);
      std::vector<Vec> with = space;
      with.push_back(e);
      bool in_space = row_space(with, r).size() == space.size();
      CHECK(in_space == clifford_condition(p, e).holds);
    }
  }
}

TEST_CASE("listed-relation theta conversion") {
  auto f = file("x, y", "x*x; x*y + y*x; y*y; x*x + y*y");
  auto p = f.presentation();
  Vec theta = theta_from_listed(p, f.relations, ints({1, 2, 3, 4}));
  CHECK(theta_on_listed(p, f.relations, theta) == ints({1, 2, 3, 4}));
  try {
    theta_from_listed(p, f.relations, ints({1, 2, 3, 5}));
    FAIL("expected inconsistency");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InconsistentTheta);
  }
  CHECK_THROWS_AS(theta_from_listed(p, f.relations, ints({1, 2})), Error);
}

TEST_CASE("theta from a central element") {
  auto s = pres("x, y", "x*y - y*x");
  auto e = quadratic_dual(s);
  // Echelon basis of the dual relations: x*x, x*y + y*x, y*y (pivot order).
  auto theta = [&](const char* z) {
    return theta_from_central(HypersurfaceInput{s, poly(s, z)}).values();
  };
  CHECK(e.relations().dim() == 3);
  CHECK(e.relations().basis()[0] == poly(e, "x_d*x_d"));
  CHECK(e.relations().basis()[1] == poly(e, "x_d*y_d + y_d*x_d"));
  CHECK(theta("x*x + y*y") == ints({1, 0, 1}));
  CHECK(theta("x*x") == ints({1, 0, 0}));
  CHECK(theta("x*y") == ints({0, 1, 0}));
  // Lift independence: x⊗y and y⊗x represent the same class.
  CHECK(theta_from_lift(s, poly(s, "x*y")).values() == theta_from_lift(s, poly(s, "y*x")).values());
  CHECK_THROWS_AS(theta_from_central(HypersurfaceInput{s, poly(s, "x*y - y*x")}), Error);
  auto qplane = pres("x, y", "x*y + y*x");
  try {
    theta_from_central(HypersurfaceInput{qplane, poly(qplane, "x*y")});
    FAIL("expected NotCentral");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NotCentral);
  }
}

TEST_CASE("property: theta_z is linear in z") {
  auto s = pres("x, y, z", "x*y - y*x; y*z - z*y; z*x - x*z");
  auto th = [&](const std::string& z) { return theta_from_central(HypersurfaceInput{s, poly(s, z)}).values(); };
  const char* zs[] = {"x*x", "y*y", "x*z", "y*z + z*y"};
  for (const char* a : zs)
    for (const char* b : zs) {
      Vec sum = th(a);
      Vec tb = th(b);
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += tb[i];
      if (std::string(a) == b) continue;
      CHECK(th(std::string(a) + " + " + b) == sum);
    }
  Vec three = th("3*x*x");
  Vec one = th("x*x");
  for (std::size_t i = 0; i < one.size(); ++i) CHECK(three[i] == Scalar(3) * one[i]);
}

TEST_CASE("center correspondence") {
  for (const char* rels : {kExt2Rels, kJordanRels}) {
    auto rep = center_correspondence_check(pres("x, y", rels));
    CHECK(rep.matches);
    CHECK(rep.clifford_dim == rep.center_dim);
  }
  auto ext = center_correspondence_check(pres("x, y", kExt2Rels));
  CHECK(ext.clifford_dim == 3);
  CHECK(center_correspondence_check(pres("x, y", kJordanRels)).clifford_dim == 0);
  CHECK(center_correspondence_check(pres("x, y, z", kS2Rels)).matches);
  CHECK(center_correspondence_check(pres("x, y", kEx24Rels)).matches);
}

#include <doctest.h>

#include <random>

#include "qforge/dsl.hpp"
#include "qforge/error.hpp"

using namespace qforge;

namespace {

QuadraticPresentation parse(const std::string& gens, const std::string& rels, const char* field = "Q") {
  return parse_presentation(std::string("field ") + field + "\nalgebra A\ngenerators " + gens + "\nrelations " +
                            rels + "\n")
      .presentation();
}

// dim of degree-k part by dense elimination over the spanning set {u r v}:
// independent of the echelon tower.
std::size_t brute_dim(const QuadraticPresentation& p, std::size_t k) {
  const std::size_t d = p.num_generators();
  auto words = all_words(d, k);
  if (k < 2) return words.size();
  std::vector<Vec> rows;
  for (std::size_t left = 0; left + 2 <= k; ++left)
    for (const Word& u : all_words(d, left))
      for (const Word& v : all_words(d, k - 2 - left))
        for (const Tensor& r : p.relations().basis()) {
          Vec row(words.size());
          for (const auto& [w, c] : r.terms()) {
            Word full = u.concat(w).concat(v);
            row[std::lower_bound(words.begin(), words.end(), full) - words.begin()] = c;
          }
          rows.push_back(std::move(row));
        }
  if (rows.empty()) return words.size();
  return words.size() - Matrix::from_rows(rows, words.size()).rank();
}

const char* kS2Rels = "x*z - z*x; y*z - z*y; x*x - y*y; z*z; x*y; y*x";

}  // namespace

TEST_CASE("hilbert series of small algebras") {
  CHECK(hilbert_series(parse("x, y, z", kS2Rels), 4) == std::vector<std::size_t>{1, 3, 3, 1, 0});
  CHECK(hilbert_series(parse("x, y", "x*x; y*y; x*y + y*x"), 3) == std::vector<std::size_t>{1, 2, 1, 0});
  CHECK(hilbert_series(parse("x, y", "x*y + y*x"), 4) == std::vector<std::size_t>{1, 2, 3, 4, 5});
  CHECK(hilbert_series(parse("x, y, z", "x*y - y*x; y*z - z*y; z*x - x*z"), 3) ==
        std::vector<std::size_t>{1, 3, 6, 10});
  CHECK(top_degree(parse("x, y, z", kS2Rels)) == 3);
}

TEST_CASE("hilbert series matches brute-force elimination") {
  std::vector<QuadraticPresentation> ps = {
      parse("x, y, z", kS2Rels),
      parse("x, y", "y*y; x*y + y*x; y*x + x*x"),
      parse("x, y", "x*x; y*y; x*y - y*x"),
      parse("x, y", "x*y - 1/2i*y*x", "Qi"),
      parse("x, y, z", "x*x + y*y + z*z"),
  };
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-1, 1);
  for (int t = 0; t < 6; ++t) {
    std::vector<Tensor> rels;
    for (int r = 0; r < 2 + t % 3; ++r) {
      std::vector<Tensor::Term> terms;
      for (const Word& w : all_words(3, 2)) terms.emplace_back(w, Scalar(coef(rng)));
      rels.push_back(Tensor::from_terms(Field::Rationals, 2, terms));
    }
    ps.emplace_back(Field::Rationals, std::vector<std::string>{"a", "b", "c"}, rels);
  }
  for (const auto& p : ps) {
    auto h = hilbert_series(p, 4);
    for (std::size_t k = 0; k <= 4; ++k) CHECK(h[k] == brute_dim(p, k));
  }
}

TEST_CASE("normal words of the three-generator example") {
  auto p = parse("x, y, z", kS2Rels);
  SliceTower tower(p, 3);
  CHECK(p.relations().dim() == 6);
  CHECK(tower.slice(2).basis == std::vector<Word>{Word{0, 0}, Word{0, 2}, Word{1, 2}});
  CHECK(tower.slice(3).basis == std::vector<Word>{Word{0, 0, 2}});
  // y*y = x*x and z*x = x*z in the quotient.
  CHECK(tower.reduce_word(Word{1, 1}) == Vec{Scalar(1), Scalar(0), Scalar(0)});
  CHECK(tower.reduce_word(Word{2, 0}) == Vec{Scalar(0), Scalar(1), Scalar(0)});
}

TEST_CASE("quadratic dual") {
  auto p = parse("x, y", "x*y - y*x");
  auto d = quadratic_dual(p);
  CHECK(d.generators() == std::vector<std::string>{"x_d", "y_d"});
  CHECK(d.relations().dim() == 3);
  CHECK(hilbert_series(d, 3) == std::vector<std::size_t>{1, 2, 1, 0});
  auto dd = quadratic_dual(d);
  CHECK(dd.generators() == p.generators());
  CHECK(dd.relations() == p.relations());
  // Free algebra and its dual k⟨V⟩/(V⊗V).
  auto free = QuadraticPresentation(Field::Rationals, {"x"}, {});
  CHECK(quadratic_dual(free).relations().dim() == 1);
}

TEST_CASE("central degree-2 elements") {
  auto qplane = parse("x, y", "x*y + y*x");
  auto c = central_degree2(qplane);
  // span{x^2, y^2} in the normal basis (x*x, x*y, y*y).
  CHECK(c == std::vector<Vec>{{Scalar(1), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(0), Scalar(1)}});
  CHECK(central_degree2(parse("x, y", "x*y - y*x")).size() == 3);
  CHECK(central_degree2(parse("x, y", "x*x; y*y")).empty() == false);
  SliceTower tower(qplane, 3);
  CHECK(!is_central_degree2(tower, {Scalar(0), Scalar(1), Scalar(0)}));
}

TEST_CASE("regularity of central elements") {
  auto comm = parse("x, y", "x*y - y*x");
  auto xy = parse_polynomial("x*y", {"x", "y"}, Field::Rationals);
  CHECK(regular_upto(comm, xy, 4).regular());
  auto ext = parse("x, y", "x*x; y*y; x*y + y*x");
  auto rep = regular_upto(ext, xy, 2);
  CHECK(!rep.regular());
  CHECK(rep.first_failure == 1u);
  CHECK(rep.left_injective[0]);
  CHECK_THROWS_AS(regular_upto(ext, parse_polynomial("x*x", {"x", "y"}, Field::Rationals), 2), Error);
}

TEST_CASE("numeric Koszul check") {
  auto k1 = koszul_numeric_check(parse("x, y", "x*y - y*x"), 5);
  CHECK(k1.pass);
  CHECK(k1.product_coefficients == std::vector<long long>{1, 0, 0, 0, 0, 0});
  CHECK(koszul_numeric_check(parse("x, y, z", kS2Rels), 5).pass);
  CHECK(koszul_numeric_check(parse("x, y", "x*x; y*y; x*y - y*x"), 5).pass);
  CHECK(koszul_numeric_check(parse("x, y, z", "x*y"), 4).pass);
  // Two relations x^2 and x*y + y^2: the series product breaks in degree 4.
  // The expected coefficients come from brute-force dimensions.
  auto p = parse("x, y", "x*x; x*y + y*y");
  auto d = quadratic_dual(p);
  auto bad = koszul_numeric_check(p, 5);
  CHECK(!bad.pass);
  std::optional<std::size_t> first;
  for (std::size_t k = 0; k <= 5; ++k) {
    long long c = 0;
    for (std::size_t i = 0; i <= k; ++i)
      c += ((k - i) % 2 ? -1 : 1) * static_cast<long long>(brute_dim(p, i) * brute_dim(d, k - i));
    CHECK(bad.product_coefficients[k] == c);
    if (c != (k == 0) && !first) first = k;
  }
  CHECK(bad.first_failing_degree == first);
  CHECK_THROWS_AS(koszul_numeric_check(parse("x", "x*x"), 1), Error);
}

TEST_CASE("resource cap and infinite algebras") {
  Limits tiny;
  tiny.word_cap = 100;
  CHECK_THROWS_AS(hilbert_series(parse("x, y", "x*y - y*x"), 8, tiny), Error);
  try {
    top_degree(parse("x, y", "x*y - y*x"), tiny);
    FAIL("expected failure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotFiniteDimensional);
  }
}

TEST_CASE("filtered quotient of a Clifford deformation") {
  // Exterior algebra on two generators with x^2 = y^2 = 1: a Clifford algebra.
  auto p = parse("x, y", "x*x; y*y; x*y + y*x");
  // Echelon basis order is (x*x, x*y + y*x, y*y).
  FilteredQuotient fq(p, {Scalar(1), Scalar(0), Scalar(1)}, Limits{});
  fq.extend_to(4);
  CHECK(fq.quotient_dim(3) == 4);
  CHECK(fq.quotient_dim(4) == 4);
  auto red = fq.reduce(Word{1, 0, 1});  // y x y = -x y y = -x
  REQUIRE(red.size() == 1);
  CHECK(red[0].first == Word{0});
  CHECK(red[0].second == Scalar(-1));
  // k[x,y]/(x^2) with y*x - x*y -> 1 forces 2x = 0: the quotient collapses
  // below 1 + 2 + 2 + 2.
  auto trunc = parse("x, y", "x*y - y*x; x*x");
  FilteredQuotient bad(trunc, {Scalar(0), Scalar(1)}, Limits{});
  bad.extend_to(3);
  CHECK(bad.quotient_dim(3) < 7);
}

TEST_CASE("presentation files") {
  const std::string text =
      "# comment\nfield Qi\nalgebra T\ngenerators x, y\nrelations x*x; x*y - 1/2i*y*x  # tail\n"
      "clifford a: 1, 1/2+1/3i\ncentral w: y*y\nassert koszul\n";
  auto f = parse_presentation(text);
  CHECK(f.field == Field::GaussianRationals);
  CHECK(f.relations.size() == 2);
  CHECK(f.clifford_values("a")[1] == Scalar(mpq_class(1, 2), mpq_class(1, 3)));
  CHECK(f.asserts("koszul"));
  auto again = parse_presentation(print_presentation(f));
  CHECK(print_presentation(again) == print_presentation(f));
  CHECK(again.relations == f.relations);
  CHECK_THROWS_AS(f.clifford_values("b"), Error);

  auto code_of = [](const std::string& s) {
    try {
      parse_presentation(s);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::UsageError;
  };
  const std::string head = "field Q\nalgebra A\ngenerators x, y\n";
  CHECK(code_of(head + "relations x*q") == ErrorCode::UnknownGenerator);
  CHECK(code_of(head + "relations x*y*x") == ErrorCode::DegreeError);
  CHECK(code_of(head + "relations x*y - x*y") == ErrorCode::DegreeError);
  CHECK(code_of(head + "relations x*y\nclifford a: 1, 2") == ErrorCode::ArityMismatch);
  CHECK(code_of(head + "relations x*y\nclifford a: 1\ncentral a: x*x") == ErrorCode::NameClash);
  CHECK(code_of(head + "relations x*y\nclifford a: 1i") == ErrorCode::SyntaxError);
  CHECK(code_of("field Q\nalgebra A\ngenerators x, x\nrelations") == ErrorCode::NameClash);
  CHECK(code_of(head + "relations x*y\nassert smooth") == ErrorCode::SyntaxError);
  try {
    parse_presentation(head + "relations x*y +\n");
    FAIL("expected failure");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("end of input") != std::string::npos);
  }
}

TEST_CASE("property: print/parse round trip of random presentations") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int t = 0; t < 25; ++t) {
    Field f = t % 2 ? Field::GaussianRationals : Field::Rationals;
    PresentationFile file;
    file.field = f;
    file.name = "R" + std::to_string(t);
    file.generators = {"a", "b", "c1"};
    for (int r = 0; r < 1 + t % 3; ++r) {
      std::vector<Tensor::Term> terms;
      for (const Word& w : all_words(3, 2)) {
        int re = coef(rng), im = f == Field::GaussianRationals ? coef(rng) : 0;
        terms.emplace_back(w, im ? Scalar(mpq_class(re, 2), mpq_class(im, 3)) : Scalar(re));
      }
      auto rel = Tensor::from_terms(f, 2, terms);
      if (!rel.is_zero()) file.relations.push_back(rel);
    }
    auto back = parse_presentation(print_presentation(file));
    CHECK(back.relations == file.relations);
    CHECK(back.generators == file.generators);
  }
}

#include "qforge/deform.hpp"

#include <map>

#include "qforge/error.hpp"

namespace qforge {

namespace {

Deformation build_impl(const QuadraticPresentation& e, const Vec& theta, const Limits& limits) {
  const std::size_t n = top_degree(e, limits);
  const std::vector<std::size_t> dims = hilbert_series(e, n, limits);
  std::size_t total = 0;
  for (std::size_t k : dims) total += k;

  FilteredQuotient fq(e, theta, limits);
  fq.extend_to(n + 1);
  if (fq.quotient_dim(n + 1) != total)
    fail(ErrorCode::PBWFailure, "truncated quotient has dimension " + std::to_string(fq.quotient_dim(n + 1)) +
                                    " at level " + std::to_string(n + 1) + ", expected " + std::to_string(total));

  std::vector<Word> words;
  std::vector<std::size_t> degrees;
  for (std::size_t k = 0; k <= n; ++k) {
    auto nw = fq.normal_words(k);
    if (nw.size() != dims[k]) fail(ErrorCode::PBWFailure, "normal words of degree " + std::to_string(k) + " differ");
    for (auto& w : nw) {
      words.push_back(std::move(w));
      degrees.push_back(k);
    }
  }
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);
  const std::size_t dim = words.size();

  std::vector<Matrix> action;
  for (Letter x = 0; x < e.num_generators(); ++x) {
    Matrix m(dim, dim);
    for (std::size_t b = 0; b < dim; ++b)
      for (auto& [w, c] : fq.reduce(words[b].prepend(x))) m(index.at(w), b) += c;
    action.push_back(std::move(m));
  }

  std::vector<SparseCoords> table(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      Vec v(dim);
      v[j] = Scalar(1);
      const auto& letters = words[i].letters();
      for (auto it = letters.rbegin(); it != letters.rend(); ++it) v = action[*it].apply(v);
      for (std::size_t k = 0; k < dim; ++k)
        if (!v[k].is_zero()) table[i * dim + j].emplace_back(k, v[k]);
    }
  }

  std::vector<std::string> labels;
  std::vector<int> parity;
  for (const Word& w : words) {
    labels.push_back(w.to_string(e.generators()));
    parity.push_back(static_cast<int>(w.length() % 2));
  }
  Vec unit(dim);
  unit[0] = Scalar(1);
  FiniteAlgebra alg(e.field(), std::move(labels), std::move(parity), std::move(table), std::move(unit));
  alg.set_degrees(degrees);
  return Deformation{e, theta, n, std::move(words), dims, std::move(alg), std::move(action)};
}

}  // namespace

Vec Deformation::word_image(const Word& w) const {
  Vec v = algebra.unit();
  const auto& letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) v = generator_action.at(*it).apply(v);
  return v;
}

PbwReport pbw_check(const QuadraticPresentation& e, const Vec& theta, const Limits& limits) {
  PbwReport rep;
  rep.top_degree = top_degree(e, limits);
  for (std::size_t k : hilbert_series(e, rep.top_degree, limits)) rep.expected += k;
  FilteredQuotient fq(e, theta, limits);
  fq.extend_to(rep.top_degree + 2);
  rep.at_n1 = fq.quotient_dim(rep.top_degree + 1);
  rep.at_n2 = fq.quotient_dim(rep.top_degree + 2);
  return rep;
}

Deformation build_deformation(const CliffordMap& theta, const Limits& limits) {
  // CliffordMap construction already verified the condition; recheck anyway
  // since the presentation may have been copied from elsewhere.
  if (!clifford_condition(theta.presentation(), theta.values()).holds)
    fail(ErrorCode::NotClifford, "theta is not a Clifford map");
  return build_impl(theta.presentation(), theta.values(), limits);
}

Deformation build_deformation_unchecked(const QuadraticPresentation& e, const Vec& theta, const Limits& limits) {
  return build_impl(e, theta, limits);
}

Z2Split z2_components(const FiniteAlgebra& a) {
  Z2Split s;
  for (std::size_t i = 0; i < a.dim(); ++i) (a.parity()[i] ? s.odd_basis : s.even_basis).push_back(i);
  s.even = s.even_basis.size();
  s.odd = s.odd_basis.size();
  return s;
}

BilinearForm frobenius_form(const Deformation& d) {
  if (d.graded_dims.back() != 1)
    fail(ErrorCode::NotFrobeniusTop, "top degree " + std::to_string(d.top_degree) + " has dimension " +
                                         std::to_string(d.graded_dims.back()) + ", expected 1");
  const std::size_t dim = d.algebra.dim();
  const std::size_t top = dim - 1;  // the unique longest normal word comes last
  BilinearForm f;
  f.top_word = d.words[top];
  f.parity = static_cast<int>(d.top_degree % 2);
  f.gram = Matrix(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (const auto& [k, c] : d.algebra.product(i, j))
        if (k == top) f.gram(i, j) = c;
  f.rank = f.gram.rank();
  if (f.rank != dim)
    fail(ErrorCode::NondegeneracyFailure, "Frobenius form has rank " + std::to_string(f.rank) + " < " +
                                              std::to_string(dim));
  return f;
}

bool strong_grading_check(const FiniteAlgebra& a) {
  Z2Split s = z2_components(a);
  std::vector<Vec> odd_odd, even_odd;
  for (std::size_t i : s.odd_basis) {
    for (std::size_t j : s.odd_basis) odd_odd.push_back(a.multiply(a.basis_vector(i), a.basis_vector(j)));
    for (std::size_t j : s.even_basis) even_odd.push_back(a.multiply(a.basis_vector(j), a.basis_vector(i)));
  }
  for (const Vec& v : odd_odd)
    if (a.parity_of(v) != 0) return false;
  for (const Vec& v : even_odd)
    if (a.parity_of(v) != 1 && !is_zero(v)) return false;
  return rank_of(odd_odd, a.dim()) == s.even && rank_of(even_odd, a.dim()) == s.odd;
}

}  // namespace qforge

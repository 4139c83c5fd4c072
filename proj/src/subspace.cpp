#include "qforge/subspace.hpp"

#include <algorithm>

#include "qforge/error.hpp"

namespace qforge {

namespace {

SparseRow to_row(const Tensor& t, const WordCoder& coder, std::uint64_t shift = 0) {
  SparseRow row;
  row.reserve(t.terms().size());
  for (const auto& [w, c] : t.terms()) row.emplace_back(coder.encode(w) + shift, c);
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

Tensor from_row(Field field, std::size_t degree, const SparseRow& row, const WordCoder& coder,
                std::uint64_t shift = 0) {
  std::vector<Tensor::Term> terms;
  terms.reserve(row.size());
  for (const auto& [k, c] : row) terms.emplace_back(coder.decode(k - shift), c);
  return Tensor::from_terms(field, degree, std::move(terms));
}

void check_compatible(const Subspace& a, const Subspace& b) {
  if (a.field() != b.field()) fail(ErrorCode::MixedField, "subspaces over different fields");
  if (a.degree() != b.degree() || a.generators() != b.generators())
    fail(ErrorCode::MixedDegree, "subspaces of different ambient spaces");
}

}  // namespace

Subspace echelonize(Field field, std::size_t generators, std::size_t degree,
                    const std::vector<Tensor>& vectors) {
  for (const auto& v : vectors) {
    if (v.field() != field) fail(ErrorCode::MixedField, "tensor over a different field");
    if (v.degree() != degree) fail(ErrorCode::MixedDegree, "tensor of a different degree");
    for (const auto& [w, c] : v.terms())
      for (Letter x : w.letters())
        if (x >= generators) fail(ErrorCode::DimensionMismatch, "letter outside the generator range");
  }
  WordCoder coder(generators, degree);
  SparseRref rref;
  for (const auto& v : vectors) rref.insert(to_row(v, coder));
  rref.finalize();
  Subspace s(field, generators, degree);
  for (const SparseRow* row : rref.sorted_rows()) s.basis_.push_back(from_row(field, degree, *row, coder));
  return s;
}

std::vector<Word> Subspace::pivots() const {
  std::vector<Word> out;
  out.reserve(basis_.size());
  for (const auto& b : basis_) out.push_back(b.leading_word());
  return out;
}

std::vector<Word> Subspace::non_pivots() const {
  std::vector<Word> piv = pivots();
  std::vector<Word> out;
  for (auto& w : all_words(generators_, degree_))
    if (!std::binary_search(piv.begin(), piv.end(), w)) out.push_back(std::move(w));
  return out;
}

Tensor Subspace::reduce(const Tensor& v) const {
  if (v.degree() != degree_) fail(ErrorCode::MixedDegree, "reducing a tensor of another degree");
  Tensor r = v;
  // Basis is sorted by pivot; eliminate from the largest pivot downward.
  for (auto it = basis_.rbegin(); it != basis_.rend(); ++it) {
    Scalar c = r.coefficient(it->leading_word());
    if (!c.is_zero()) r = r - *it * c;
  }
  return r;
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Tensor& t) { return contains(t); });
}

std::vector<Scalar> Subspace::coordinates(const Tensor& v) const {
  std::vector<Scalar> out;
  out.reserve(basis_.size());
  Tensor rebuilt(field_, degree_);
  for (const auto& b : basis_) {
    Scalar c = v.coefficient(b.leading_word());
    rebuilt = rebuilt + b * c;
    out.push_back(std::move(c));
  }
  if (!(rebuilt == v)) fail(ErrorCode::DimensionMismatch, "vector is not in the subspace");
  return out;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.field_ == b.field_ && a.generators_ == b.generators_ && a.degree_ == b.degree_ &&
         a.basis_ == b.basis_;
}

Subspace span_sum(const Subspace& a, const Subspace& b) {
  check_compatible(a, b);
  std::vector<Tensor> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return echelonize(a.field(), a.generators(), a.degree(), all);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  check_compatible(a, b);
  // Rows (u | u) for u in a and (v | 0) for v in b; the left block has the
  // larger keys, so rows whose left part cancels carry a ∩ b on the right.
  WordCoder coder(a.generators(), a.degree());
  const std::uint64_t shift = coder.offset(a.degree() + 1);
  SparseRref rref;
  for (const auto& u : a.basis()) {
    SparseRow row = to_row(u, coder);
    SparseRow left = to_row(u, coder, shift);
    row.insert(row.end(), left.begin(), left.end());
    rref.insert(row);
  }
  for (const auto& v : b.basis()) rref.insert(to_row(v, coder, shift));
  rref.finalize();
  std::vector<Tensor> common;
  for (const SparseRow* row : rref.sorted_rows())
    if (row->back().first < shift) common.push_back(from_row(a.field(), a.degree(), *row, coder));
  return echelonize(a.field(), a.generators(), a.degree(), common);
}

Subspace annihilator(const Subspace& s) {
  // For each non-pivot word w: w* - sum_rows coef_w(row) * pivot(row)*.
  std::vector<Tensor> out;
  const auto& basis = s.basis();
  for (const Word& w : s.non_pivots()) {
    std::vector<Tensor::Term> terms{{w, Scalar(1)}};
    for (const auto& row : basis) {
      Scalar c = row.coefficient(w);
      if (!c.is_zero()) terms.emplace_back(row.leading_word(), -c);
    }
    out.push_back(Tensor::from_terms(s.field(), s.degree(), std::move(terms)));
  }
  return echelonize(s.field(), s.generators(), s.degree(), out);
}

Subspace pad(const Subspace& s, std::size_t left, std::size_t right) {
  std::vector<Tensor> out;
  auto lefts = all_words(s.generators(), left);
  auto rights = all_words(s.generators(), right);
  for (const auto& u : lefts)
    for (const auto& b : s.basis())
      for (const auto& v : rights) {
        std::vector<Tensor::Term> terms;
        for (const auto& [w, c] : b.terms()) terms.emplace_back(u.concat(w).concat(v), c);
        out.push_back(Tensor::from_terms(s.field(), s.degree() + left + right, std::move(terms)));
      }
  return echelonize(s.field(), s.generators(), s.degree() + left + right, out);
}

}  // namespace qforge

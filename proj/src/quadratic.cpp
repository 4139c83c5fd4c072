#include "qforge/quadratic.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <set>

#include "qforge/error.hpp"

namespace qforge {

Limits Limits::from_env() {
  Limits l;
  if (const char* env = std::getenv("QFORGE_RESOURCE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) l.word_cap = v;
  }
  return l;
}

namespace {

void check_names(const std::vector<std::string>& names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) fail(ErrorCode::SyntaxError, "empty generator name");
    if (!seen.insert(n).second) fail(ErrorCode::NameClash, "duplicate generator name '" + n + "'");
  }
  if (names.empty()) fail(ErrorCode::DimensionMismatch, "a presentation needs at least one generator");
}

std::size_t coder_length(std::size_t radix, std::uint64_t cap) {
  std::size_t len = 2;
  while (len < 62 && checked_power(radix, len + 1) <= cap) ++len;
  return len;
}

void check_cap(std::size_t radix, std::size_t length, const Limits& limits) {
  std::uint64_t words = checked_power(radix, length);
  if (words > limits.word_cap)
    fail(ErrorCode::ResourceBound, std::to_string(radix) + "^" + std::to_string(length) +
                                       " words exceed the resource cap of " +
                                       std::to_string(limits.word_cap));
}

}  // namespace

QuadraticPresentation::QuadraticPresentation(Field field, std::vector<std::string> generators,
                                             const std::vector<Tensor>& relations)
    : generators_(std::move(generators)),
      relations_(echelonize(field, generators_.size(), 2, relations)) {
  check_names(generators_);
}

QuadraticPresentation::QuadraticPresentation(std::vector<std::string> generators, Subspace relations)
    : generators_(std::move(generators)), relations_(std::move(relations)) {
  check_names(generators_);
  if (relations_.degree() != 2) fail(ErrorCode::DegreeError, "relations must live in V⊗V");
  if (relations_.generators() != generators_.size())
    fail(ErrorCode::DimensionMismatch, "relation subspace over a different generator count");
}

// ---------------------------------------------------------------------------

FilteredQuotient::FilteredQuotient(const QuadraticPresentation& p, Vec theta, const Limits& limits)
    : field_(p.field()),
      generators_(p.num_generators()),
      relation_basis_(p.relations().basis()),
      theta_(std::move(theta)),
      limits_(limits),
      coder_(generators_, coder_length(generators_, limits.word_cap)) {
  if (theta_.size() != relation_basis_.size())
    fail(ErrorCode::DimensionMismatch, "theta has " + std::to_string(theta_.size()) + " entries for " +
                                           std::to_string(relation_basis_.size()) + " relations");
  quotient_dims_ = {1, 1 + generators_};
}

void FilteredQuotient::extend_to(std::size_t level) {
  while (level_ < level) add_level(level_ + 1);
}

void FilteredQuotient::add_level(std::size_t level) {
  check_cap(generators_, level, limits_);
  if (level > coder_.max_length()) fail(ErrorCode::ResourceBound, "word length beyond the indexable range");
  if (level >= 3) {
    // V · J_{<=level-1} = V · J_{<=level-2} + V · (rows added at level-1), and the
    // first summand already lies in J_{<=level-1}. New rows are the ones whose
    // pivot was not a pivot before; usually all are led by words of length level-1.
    std::vector<SparseRow> prev;
    for (const SparseRow* row : rref_.sorted_rows())
      if (!std::binary_search(old_pivots_.begin(), old_pivots_.end(), row->back().first)) prev.push_back(*row);
    for (Letter x = 0; x < generators_; ++x) {
      for (const SparseRow& row : prev) {
        SparseRow shifted;
        shifted.reserve(row.size());
        for (const auto& [k, c] : row) shifted.emplace_back(coder_.encode(coder_.decode(k).prepend(x)), c);
        std::sort(shifted.begin(), shifted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        rref_.insert(shifted);
      }
    }
  }
  // (r - theta(r)) · v with |v| = level - 2.
  for (const Word& v : all_words(generators_, level - 2)) {
    for (std::size_t j = 0; j < relation_basis_.size(); ++j) {
      SparseRow row;
      for (const auto& [w, c] : relation_basis_[j].terms()) row.emplace_back(coder_.encode(w.concat(v)), c);
      if (!theta_[j].is_zero()) row.emplace_back(coder_.encode(v), -theta_[j]);
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      rref_.insert(row);
    }
  }
  rref_.finalize();
  old_pivots_ = new_pivots_;
  new_pivots_.clear();
  for (const SparseRow* row : rref_.sorted_rows()) new_pivots_.push_back(row->back().first);
  level_ = level;
  quotient_dims_.push_back(static_cast<std::size_t>(coder_.offset(level + 1) - rref_.rank()));
}

bool FilteredQuotient::is_normal(const Word& w) const {
  if (w.length() > level_) fail(ErrorCode::ResourceBound, "word longer than the truncation level");
  return !rref_.is_pivot(coder_.encode(w));
}

std::size_t FilteredQuotient::normal_count(std::size_t length) const {
  std::size_t n = 0;
  for (const Word& w : all_words(generators_, length)) n += is_normal(w) ? 1 : 0;
  return n;
}

std::vector<Word> FilteredQuotient::normal_words(std::size_t length) const {
  std::vector<Word> out;
  for (Word& w : all_words(generators_, length))
    if (is_normal(w)) out.push_back(std::move(w));
  return out;
}

std::vector<std::pair<Word, Scalar>> FilteredQuotient::reduce(const Word& w) const {
  if (w.length() > level_) fail(ErrorCode::ResourceBound, "word longer than the truncation level");
  const SparseRow* row = rref_.row_for_pivot(coder_.encode(w));
  if (!row) return {{w, Scalar(1)}};
  std::vector<std::pair<Word, Scalar>> out;
  out.reserve(row->size() - 1);
  for (std::size_t k = 0; k + 1 < row->size(); ++k) out.emplace_back(coder_.decode((*row)[k].first), -(*row)[k].second);
  return out;
}

// ---------------------------------------------------------------------------

std::optional<std::size_t> GradedSlice::index_of(const Word& w) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), w);
  if (it != basis.end() && *it == w) return static_cast<std::size_t>(it - basis.begin());
  return std::nullopt;
}

SliceTower::SliceTower(const QuadraticPresentation& p, std::size_t max_degree, const Limits& limits)
    : presentation_(std::make_shared<const QuadraticPresentation>(p)) {
  FilteredQuotient fq(p, Vec(p.relations().dim()), limits);
  fq.extend_to(max_degree);
  for (std::size_t k = 0; k <= max_degree; ++k) {
    GradedSlice s;
    s.degree = k;
    s.basis = fq.normal_words(k);
    for (const Word& w : all_words(p.num_generators(), k)) {
      if (fq.is_normal(w)) continue;
      SparseCoords coords;
      for (auto& [nw, c] : fq.reduce(w)) coords.emplace_back(*s.index_of(nw), std::move(c));
      s.lift_coefficients.emplace(w, std::move(coords));
    }
    slices_.push_back(std::move(s));
  }
}

Vec SliceTower::reduce_word(const Word& w) const {
  const GradedSlice& s = slice(w.length());
  Vec out(s.dim());
  if (auto idx = s.index_of(w)) {
    out[*idx] = Scalar(1);
    return out;
  }
  for (const auto& [i, c] : s.lift_coefficients.at(w)) out[i] = c;
  return out;
}

Vec SliceTower::reduce(const Tensor& t) const {
  const GradedSlice& s = slice(t.degree());
  Vec out(s.dim());
  for (const auto& [w, c] : t.terms()) {
    if (auto idx = s.index_of(w)) {
      out[*idx] += c;
      continue;
    }
    for (const auto& [i, v] : s.lift_coefficients.at(w)) out[i].add_product(c, v);
  }
  return out;
}

Tensor SliceTower::lift(const Vec& coords, std::size_t degree) const {
  const GradedSlice& s = slice(degree);
  if (coords.size() != s.dim()) fail(ErrorCode::DimensionMismatch, "coordinate vector length mismatch");
  std::vector<Tensor::Term> terms;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) terms.emplace_back(s.basis[i], coords[i]);
  return Tensor::from_terms(presentation_->field(), degree, std::move(terms));
}

Vec SliceTower::multiply(const Vec& a, std::size_t deg_a, const Vec& b, std::size_t deg_b) const {
  return reduce(lift(a, deg_a).tensor(lift(b, deg_b)));
}

GradedSlice degree_component(const QuadraticPresentation& p, std::size_t k, const Limits& limits) {
  return SliceTower(p, k, limits).slice(k);
}

std::vector<std::size_t> hilbert_series(const QuadraticPresentation& p, std::size_t max_degree,
                                        const Limits& limits) {
  FilteredQuotient fq(p, Vec(p.relations().dim()), limits);
  fq.extend_to(max_degree);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= max_degree; ++k) out.push_back(fq.normal_count(k));
  return out;
}

std::size_t top_degree(const QuadraticPresentation& p, const Limits& limits) {
  FilteredQuotient fq(p, Vec(p.relations().dim()), limits);
  for (std::size_t k = 1;; ++k) {
    if (limits.degree_cap && k > *limits.degree_cap + 1)
      fail(ErrorCode::NotFiniteDimensional,
           "no vanishing degree found up to degree " + std::to_string(*limits.degree_cap + 1));
    try {
      fq.extend_to(k);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ResourceBound) throw;
      fail(ErrorCode::NotFiniteDimensional,
           "no vanishing degree found below the resource cap (" + std::string(e.what()) + ")");
    }
    if (fq.normal_count(k) == 0) return k - 1;
  }
}

std::vector<std::string> dual_generator_names(const std::vector<std::string>& names) {
  const std::string suffix = "_d";
  bool all_dual = std::all_of(names.begin(), names.end(), [&](const std::string& n) {
    return n.size() > suffix.size() && n.compare(n.size() - suffix.size(), suffix.size(), suffix) == 0;
  });
  std::vector<std::string> out;
  for (const auto& n : names) out.push_back(all_dual ? n.substr(0, n.size() - suffix.size()) : n + suffix);
  return out;
}

QuadraticPresentation quadratic_dual(const QuadraticPresentation& p) {
  return QuadraticPresentation(dual_generator_names(p.generators()), annihilator(p.relations()));
}

bool is_central_degree2(const SliceTower& tower, const Vec& z) {
  const std::size_t d = tower.presentation().num_generators();
  for (Letter x = 0; x < d; ++x) {
    Vec gen(d);
    gen[x] = Scalar(1);
    Vec zx = tower.multiply(z, 2, gen, 1);
    Vec xz = tower.multiply(gen, 1, z, 2);
    for (std::size_t i = 0; i < zx.size(); ++i)
      if (!(zx[i] == xz[i])) return false;
  }
  return true;
}

std::vector<Vec> central_degree2(const QuadraticPresentation& p, const Limits& limits) {
  SliceTower tower(p, 3, limits);
  const std::size_t n2 = tower.dim(2), n3 = tower.dim(3), d = p.num_generators();
  Matrix m(d * n3, n2);
  for (std::size_t col = 0; col < n2; ++col) {
    const Word& w = tower.slice(2).basis[col];
    for (Letter x = 0; x < d; ++x) {
      Vec wx = tower.reduce_word(w.append(x));
      Vec xw = tower.reduce_word(w.prepend(x));
      for (std::size_t i = 0; i < n3; ++i) m(x * n3 + i, col) = wx[i] - xw[i];
    }
  }
  return row_space(m.nullspace(), n2);
}

RegularityReport regular_upto(const QuadraticPresentation& p, const Tensor& z, std::size_t bound,
                              const Limits& limits) {
  if (z.degree() != 2) fail(ErrorCode::DegreeError, "regularity test needs a degree-2 element");
  SliceTower tower(p, bound + 2, limits);
  Vec zc = tower.reduce(z);
  if (is_zero(zc)) fail(ErrorCode::ZeroElement, "the element vanishes in degree 2");
  Tensor zl = tower.lift(zc, 2);
  RegularityReport rep;
  rep.bound = bound;
  for (std::size_t k = 0; k <= bound; ++k) {
    const auto& basis = tower.slice(k).basis;
    std::vector<Vec> left, right;
    for (const Word& w : basis) {
      Tensor m = Tensor::monomial(p.field(), w);
      left.push_back(tower.reduce(zl.tensor(m)));
      right.push_back(tower.reduce(m.tensor(zl)));
    }
    bool li = basis.empty() || Matrix::from_columns(left, tower.dim(k + 2)).rank() == basis.size();
    bool ri = basis.empty() || Matrix::from_columns(right, tower.dim(k + 2)).rank() == basis.size();
    rep.left_injective.push_back(li);
    rep.right_injective.push_back(ri);
    if ((!li || !ri) && !rep.first_failure) rep.first_failure = k;
  }
  return rep;
}

KoszulCheck koszul_numeric_check(const QuadraticPresentation& p, std::size_t max_degree, const Limits& limits) {
  if (max_degree < 2) fail(ErrorCode::UsageError, "the Koszul series check needs max degree >= 2");
  auto h = hilbert_series(p, max_degree, limits);
  auto hd = hilbert_series(quadratic_dual(p), max_degree, limits);
  KoszulCheck out;
  for (std::size_t k = 0; k <= max_degree; ++k) {
    long long c = 0;
    for (std::size_t i = 0; i <= k; ++i) {
      long long term = static_cast<long long>(h[i]) * static_cast<long long>(hd[k - i]);
      c += ((k - i) % 2 == 0) ? term : -term;
    }
    out.product_coefficients.push_back(c);
    if (c != (k == 0 ? 1 : 0) && out.pass) {
      out.pass = false;
      out.first_failing_degree = k;
    }
  }
  return out;
}

}  // namespace qforge

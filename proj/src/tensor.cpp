#include "qforge/tensor.hpp"

#include <algorithm>

#include "qforge/error.hpp"

namespace qforge {

Tensor Tensor::from_terms(Field field, std::size_t degree, std::vector<Term> terms) {
  for (const auto& [w, c] : terms) {
    if (w.length() != degree)
      fail(ErrorCode::MixedDegree, "word of length " + std::to_string(w.length()) +
                                       " in tensor of degree " + std::to_string(degree));
    if (!c.in_field(field)) fail(ErrorCode::MixedField, "coefficient outside the base field");
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  Tensor t(field, degree);
  for (auto& term : terms) {
    if (!t.terms_.empty() && t.terms_.back().first == term.first) {
      t.terms_.back().second += term.second;
      if (t.terms_.back().second.is_zero()) t.terms_.pop_back();
    } else if (!term.second.is_zero()) {
      t.terms_.push_back(std::move(term));
    }
  }
  return t;
}

Tensor Tensor::monomial(Field field, const Word& w, Scalar c) {
  return from_terms(field, w.length(), {{w, std::move(c)}});
}

Scalar Tensor::coefficient(const Word& w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [](const Term& t, const Word& key) { return t.first < key; });
  if (it != terms_.end() && it->first == w) return it->second;
  return Scalar(0);
}

Tensor Tensor::operator+(const Tensor& o) const {
  if (o.field_ != field_) fail(ErrorCode::MixedField, "adding tensors over different fields");
  if (o.degree_ != degree_) fail(ErrorCode::MixedDegree, "adding tensors of different degrees");
  Tensor out(field_, degree_);
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      out.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      out.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar s = terms_[i].second + o.terms_[j].second;
      if (!s.is_zero()) out.terms_.emplace_back(terms_[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

Tensor Tensor::operator-(const Tensor& o) const { return *this + (-o); }

Tensor Tensor::operator*(const Scalar& c) const {
  if (!c.in_field(field_)) fail(ErrorCode::MixedField, "scalar outside the base field");
  Tensor out(field_, degree_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& [w, v] : terms_) out.terms_.emplace_back(w, v * c);
  return out;
}

Tensor Tensor::tensor(const Tensor& o) const {
  if (o.field_ != field_) fail(ErrorCode::MixedField, "tensor product over different fields");
  std::vector<Term> terms;
  terms.reserve(terms_.size() * o.terms_.size());
  for (const auto& [a, x] : terms_)
    for (const auto& [b, y] : o.terms_) terms.emplace_back(a.concat(b), x * y);
  return from_terms(field_, degree_ + o.degree_, std::move(terms));
}

Tensor Tensor::left_letter(Letter x) const {
  Tensor out(field_, degree_ + 1);
  out.terms_.reserve(terms_.size());
  // Prepending one letter preserves the lexicographic order.
  for (const auto& [w, v] : terms_) out.terms_.emplace_back(w.prepend(x), v);
  return out;
}

Tensor Tensor::right_letter(Letter x) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& [w, v] : terms_) terms.emplace_back(w.append(x), v);
  return from_terms(field_, degree_ + 1, std::move(terms));
}

bool operator==(const Tensor& a, const Tensor& b) {
  return a.field_ == b.field_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

Scalar pair(const Tensor& functional, const Tensor& vector) {
  if (functional.degree() != vector.degree())
    fail(ErrorCode::MixedDegree, "pairing tensors of different degrees");
  Scalar s(0);
  std::size_t i = 0, j = 0;
  const auto& a = functional.terms();
  const auto& b = vector.terms();
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) ++i;
    else if (b[j].first < a[i].first) ++j;
    else s.add_product(a[i++].second, b[j++].second);
  }
  return s;
}

std::string format_terms(const std::vector<std::pair<Word, Scalar>>& terms,
                         const std::vector<std::string>& names) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms) {
    std::string word = w.to_string(names);
    bool negative = sgn(c.real()) < 0 || (sgn(c.real()) == 0 && sgn(c.imag()) < 0);
    Scalar mag = negative ? -c : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (mag.is_one()) {
      out += word;
    } else if (w.empty()) {
      out += mag.to_string();
    } else {
      out += mag.to_string() + "*" + word;
    }
  }
  return out;
}

std::string Tensor::to_string(const std::vector<std::string>& names) const {
  return format_terms(terms_, names);
}

}  // namespace qforge

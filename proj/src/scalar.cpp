#include "qforge/scalar.hpp"

#include <cctype>

#include "qforge/error.hpp"

namespace qforge {

std::string_view field_name(Field f) noexcept {
  return f == Field::Rationals ? "Q" : "Qi";
}

bool field_has_i(Field f) noexcept { return f == Field::GaussianRationals; }

Scalar::Scalar(long num, long den) : re_(num, den) {
  if (den == 0) fail(ErrorCode::SyntaxError, "zero denominator");
  re_.canonicalize();
}

Scalar::Scalar(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_->canonicalize();
  normalize_imag();
}

Scalar Scalar::i() { return Scalar(mpq_class(0), mpq_class(1)); }

void Scalar::normalize_imag() {
  if (im_ && sgn(*im_) == 0) im_.reset();
}

Scalar Scalar::conj() const {
  Scalar r = *this;
  if (r.im_) *r.im_ = -*r.im_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorCode::ZeroElement, "inverse of zero scalar");
  if (!im_) return Scalar(mpq_class(1 / re_));
  mpq_class norm = re_ * re_ + *im_ * *im_;
  return Scalar(mpq_class(re_ / norm), mpq_class(-*im_ / norm));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (o.im_) {
    if (im_) *im_ += *o.im_;
    else im_ = *o.im_;
    normalize_imag();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (o.im_) {
    if (im_) *im_ -= *o.im_;
    else im_ = -*o.im_;
    normalize_imag();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (!im_ && !o.im_) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class a = re_, b = imag(), c = o.re_, d = o.imag();
  re_ = a * c - b * d;
  im_ = a * d + b * c;
  normalize_imag();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  if (!a.im_ && !b.im_ && !im_) {
    mpq_class t;
    mpq_mul(t.get_mpq_t(), a.re_.get_mpq_t(), b.re_.get_mpq_t());
    re_ += t;
    return;
  }
  *this += a * b;
}

void Scalar::sub_product(const Scalar& a, const Scalar& b) {
  if (!a.im_ && !b.im_ && !im_) {
    mpq_class t;
    mpq_mul(t.get_mpq_t(), a.re_.get_mpq_t(), b.re_.get_mpq_t());
    re_ -= t;
    return;
  }
  *this -= a * b;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.re_ = -r.re_;
  if (r.im_) *r.im_ = -*r.im_;
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.re_ != b.re_) return false;
  if (a.im_.has_value() != b.im_.has_value()) return false;
  return !a.im_ || *a.im_ == *b.im_;
}

std::string Scalar::to_string() const {
  if (!im_) return re_.get_str();
  std::string out;
  if (sgn(re_) != 0) out = re_.get_str();
  std::string im = im_->get_str();
  if (sgn(re_) != 0 && sgn(*im_) > 0) out += '+';
  out += im;
  out += 'i';
  return out;
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;
  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
};

// [sign] digits ["/" digits]
bool read_rational(Cursor& c, mpq_class& out, bool allow_sign) {
  std::size_t start = c.pos;
  std::string text;
  if (allow_sign && (c.peek() == '+' || c.peek() == '-')) text += c.s[c.pos++];
  if (!std::isdigit(static_cast<unsigned char>(c.peek()))) {
    c.pos = start;
    return false;
  }
  while (std::isdigit(static_cast<unsigned char>(c.peek()))) text += c.s[c.pos++];
  std::string den;
  if (c.peek() == '/') {
    ++c.pos;
    while (std::isdigit(static_cast<unsigned char>(c.peek()))) den += c.s[c.pos++];
    if (den.empty()) fail(ErrorCode::SyntaxError, "missing denominator in scalar");
  }
  if (text[0] == '+') text.erase(0, 1);
  mpz_class num(text, 10);
  mpz_class d = den.empty() ? mpz_class(1) : mpz_class(den, 10);
  if (d == 0) fail(ErrorCode::SyntaxError, "zero denominator in scalar");
  out = mpq_class(num, d);
  out.canonicalize();
  return true;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  Cursor c{text};
  mpq_class first;
  if (!read_rational(c, first, true)) {
    // Bare "i" / "-i".
    if (text == "i") return Scalar::i();
    if (text == "-i") return -Scalar::i();
    fail(ErrorCode::SyntaxError, "malformed scalar '" + std::string(text) + "'");
  }
  if (c.done()) return Scalar(first);
  if (c.peek() == 'i') {
    ++c.pos;
    if (!c.done()) fail(ErrorCode::SyntaxError, "trailing text in scalar '" + std::string(text) + "'");
    return Scalar(mpq_class(0), first);
  }
  mpq_class second;
  if (!read_rational(c, second, true) || c.peek() != 'i')
    fail(ErrorCode::SyntaxError, "malformed scalar '" + std::string(text) + "'");
  ++c.pos;
  if (!c.done()) fail(ErrorCode::SyntaxError, "trailing text in scalar '" + std::string(text) + "'");
  return Scalar(first, second);
}

}  // namespace qforge

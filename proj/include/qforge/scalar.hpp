#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace qforge {

// Base field of every computation. Both have characteristic zero.
enum class Field { Rationals, GaussianRationals };

std::string_view field_name(Field f) noexcept;  // "Q" / "Qi"
bool field_has_i(Field f) noexcept;

// Exact element of Q or Q(i). The imaginary part is absent (not merely zero)
// for rational values, so equality is structural.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  explicit Scalar(mpq_class re);
  Scalar(mpq_class re, mpq_class im);

  static Scalar i();

  const mpq_class& real() const { return re_; }
  mpq_class imag() const { return im_ ? *im_ : mpq_class(0); }

  bool is_zero() const { return sgn(re_) == 0 && !im_; }
  bool is_one() const { return !im_ && re_ == 1; }
  bool is_real() const { return !im_; }
  bool in_field(Field f) const { return is_real() || field_has_i(f); }

  Scalar conj() const;
  Scalar inverse() const;  // precondition: nonzero

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  // this += a * b without temporaries in the rational case.
  void add_product(const Scalar& a, const Scalar& b);
  void sub_product(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  // Canonical text: "3", "-1/2", "1/2+1/3i", "-2i", "1-1i".
  std::string to_string() const;
  static Scalar parse(std::string_view text);  // throws Error(SyntaxError)

 private:
  void normalize_imag();

  mpq_class re_;
  std::optional<mpq_class> im_;
};

}  // namespace qforge

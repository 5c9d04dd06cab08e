#pragma once

#include <gmpxx.h>

#include <complex>
#include <concepts>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace cxs {

using Rational = mpq_class;

/// Builds the canonical rational num/den. Throws std::invalid_argument on den == 0.
Rational make_rational(long num, long den = 1);

/// Parses "a", "-a/b" (optionally surrounded by whitespace).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// Square root when q is the square of a rational, nullopt otherwise.
std::optional<Rational> exact_sqrt(const Rational& q);

/// Exact Gaussian rational re + i*im. Every algebraic check in cxs runs on these.
class Scalar {
 public:
  Scalar() = default;
  template <std::integral T>
  Scalar(T re) : re_(static_cast<long>(re)) {}
  Scalar(Rational re) : re_(std::move(re)) {}
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// |z|^2, exact.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// "re", or "re+im i" / "re-im i" when the imaginary part is nonzero.
  std::string str() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Accepts "a/b", "c/d i", "a/b+c/d i", "a-i", "i", "-2/3i" and friends.
Scalar parse_scalar(std::string_view text);

/// i^k for any integer k.
Scalar i_pow(long k);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace cxs

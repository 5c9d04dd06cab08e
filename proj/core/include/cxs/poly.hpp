#pragma once

#include <complex>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cxs/matrix.hpp"

// Polynomials with Gaussian-rational coefficients in named real coordinates.

namespace cxs::xcalc {

using Coordinates = std::vector<std::string>;
using Exponents = std::vector<unsigned>;

class Poly {
 public:
  using Terms = std::map<Exponents, Scalar>;

  /// The zero polynomial with no coordinates; acts as a constant in mixed arithmetic.
  Poly() = default;
  explicit Poly(Coordinates coords) : coords_(std::move(coords)) {}
  Poly(Coordinates coords, const Scalar& c);

  static Poly constant(const Coordinates& coords, const Scalar& c) { return Poly(coords, c); }
  /// Throws std::invalid_argument when name is not a coordinate.
  static Poly variable(const Coordinates& coords, const std::string& name);

  const Coordinates& coordinates() const { return coords_; }
  const Terms& terms() const { return terms_; }
  std::size_t index_of(const std::string& name) const;

  void add_term(Exponents e, const Scalar& c);
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  Scalar coeff(const Exponents& e) const;
  int degree() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Scalar& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  Poly operator-() const { return Scalar(-1) * *this; }
  Poly pow(unsigned k) const;

  friend bool operator==(const Poly& a, const Poly& b);

  /// Conjugates the coefficients; the coordinates are real.
  Poly conj() const;
  Poly diff(std::size_t var) const;
  Poly diff(const std::string& name) const { return diff(index_of(name)); }

  Scalar evaluate(const Vector& point) const;
  std::complex<double> evaluate(const std::vector<double>& point) const;

  /// Replaces coordinate i by images[i]; images share one coordinate list, which the result uses.
  Poly substitute(const std::vector<Poly>& images) const;

  /// e.g. "x^2*y + (1/2+i)*u".
  std::string str() const;

 private:
  Coordinates coords_;
  Terms terms_;
};

/// Brings a coordinate-free constant onto the other operand's coordinates.
/// Throws std::invalid_argument when both carry different coordinate lists.
const Coordinates& common_coordinates(const Poly& a, const Poly& b);

/// Parses "x^2 - 2/3*i*y*(u + 1)"; coordinates are identifiers, i is the imaginary unit.
/// Division is allowed by constants only. Throws std::invalid_argument with the offset on failure.
Poly parse_poly(std::string_view text, const Coordinates& coords);

/// (∂_z f, ∂_z̄ f) for z = x + iy: ∂_z = (∂_x − i∂_y)/2, ∂_z̄ = (∂_x + i∂_y)/2.
std::pair<Poly, Poly> wirtinger(const Poly& f, const std::string& x, const std::string& y);

/// x + iy and x − iy.
Poly complex_coordinate(const Coordinates& coords, const std::string& x, const std::string& y);
Poly complex_conjugate_coordinate(const Coordinates& coords, const std::string& x, const std::string& y);

}  // namespace cxs::xcalc

#pragma once

#include <map>
#include <string>
#include <vector>

#include "cxs/clifford.hpp"
#include "cxs/poly.hpp"

// Differential forms, vector fields and symmetric 2-tensors with polynomial
// coefficients on one coordinate chart.
//
// A p-form is Σ_B f_B dx_B over sorted index sets B (bitmask, coordinate i ↦ bit i).
// Contraction: (v⌟ω)(v_2,…,v_p) = ω(v, v_2,…,v_p).

namespace cxs::xcalc {

using clifford::Blade;

class PolyVField;

class PolyForm {
 public:
  using Coeffs = std::map<Blade, Poly>;

  PolyForm() = default;
  /// Throws std::invalid_argument for more than 32 coordinates or negative degree.
  PolyForm(Coordinates coords, int degree);

  /// f as a 0-form.
  static PolyForm function(const Poly& f);
  /// dx for the named coordinate.
  static PolyForm dx(const Coordinates& coords, const std::string& name);
  /// df.
  static PolyForm exact(const Poly& f);

  const Coordinates& coordinates() const { return coords_; }
  int degree() const { return degree_; }
  const Coeffs& coeffs() const { return coeffs_; }
  Poly coeff(Blade b) const;

  /// Throws std::invalid_argument if the blade grade differs from the degree.
  void add_term(Blade b, const Poly& f);
  bool is_zero() const { return coeffs_.empty(); }

  PolyForm& operator+=(const PolyForm& o);
  PolyForm& operator-=(const PolyForm& o);
  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
  friend PolyForm operator*(const Poly& f, const PolyForm& a);
  friend PolyForm operator*(const Scalar& s, const PolyForm& a);
  PolyForm operator-() const { return Scalar(-1) * *this; }
  friend bool operator==(const PolyForm& a, const PolyForm& b);

  PolyForm conj() const;
  /// Coefficients at a point, exact.
  std::map<Blade, Scalar> evaluate(const Vector& point) const;
  /// Pulls the form back along a coordinate substitution x_i = images[i] (images on the target chart).
  PolyForm pullback(const std::vector<Poly>& images) const;

  /// e.g. "x*dy^dz - 2*du".
  std::string str() const;

 private:
  Coordinates coords_;
  int degree_ = 0;
  Coeffs coeffs_;
};

PolyForm wedge(const PolyForm& a, const PolyForm& b);
PolyForm d(const PolyForm& a);
PolyForm contract(const PolyVField& v, const PolyForm& a);
/// L_X α = d(X⌟α) + X⌟dα.
PolyForm lie_derivative(const PolyVField& x, const PolyForm& a);

class PolyVField {
 public:
  PolyVField() = default;
  /// The zero field.
  explicit PolyVField(Coordinates coords);
  /// Throws std::invalid_argument when the component count or coordinates disagree.
  PolyVField(Coordinates coords, std::vector<Poly> components);

  /// ∂ for the named coordinate.
  static PolyVField partial(const Coordinates& coords, const std::string& name);

  const Coordinates& coordinates() const { return coords_; }
  const std::vector<Poly>& components() const { return comps_; }
  const Poly& operator[](std::size_t i) const { return comps_[i]; }
  std::size_t dim() const { return comps_.size(); }
  bool is_zero() const;

  /// X(f) = Σ X^i ∂_i f.
  Poly apply(const Poly& f) const;

  PolyVField& operator+=(const PolyVField& o);
  PolyVField& operator-=(const PolyVField& o);
  friend PolyVField operator+(PolyVField a, const PolyVField& b) { return a += b; }
  friend PolyVField operator-(PolyVField a, const PolyVField& b) { return a -= b; }
  friend PolyVField operator*(const Poly& f, const PolyVField& v);
  friend PolyVField operator*(const Scalar& s, const PolyVField& v);
  friend bool operator==(const PolyVField& a, const PolyVField& b);

  PolyVField conj() const;
  Vector evaluate(const Vector& point) const;
  std::string str() const;

 private:
  Coordinates coords_;
  std::vector<Poly> comps_;
};

/// [X,Y]^i = X(Y^i) − Y(X^i).
PolyVField lie_bracket(const PolyVField& x, const PolyVField& y);

/// v ∧ X_1 ∧ … ∧ X_k as a polynomial multivector (same layout as a (k+1)-form).
PolyForm wedge_fields(const std::vector<PolyVField>& fields);

/// True iff v ∧ X_1 ∧ … ∧ X_k vanishes identically: v lies in the span over the
/// function ring wherever the X_i are independent.
bool membership_in_span(const PolyVField& v, const std::vector<PolyVField>& span);

/// Symmetric bilinear form Σ g_ij dx^i dx^j with polynomial entries.
class SymTensor2 {
 public:
  SymTensor2() = default;
  explicit SymTensor2(Coordinates coords);

  /// α ⊗_sym β = ½(α⊗β + β⊗α). Both must be 1-forms.
  static SymTensor2 sym(const PolyForm& alpha, const PolyForm& beta);

  const Coordinates& coordinates() const { return coords_; }
  std::size_t dim() const { return coords_.size(); }
  const Poly& entry(std::size_t i, std::size_t j) const { return g_[i][j]; }

  SymTensor2& operator+=(const SymTensor2& o);
  friend SymTensor2 operator+(SymTensor2 a, const SymTensor2& b) { return a += b; }
  friend SymTensor2 operator*(const Poly& f, const SymTensor2& g);

  bool is_symmetric() const;
  /// Complex-bilinear g(X, Y).
  Poly operator()(const PolyVField& x, const PolyVField& y) const;
  /// g(X) = g(X, ·) as a 1-form.
  PolyForm lower(const PolyVField& x) const;
  /// det of the coefficient matrix.
  Poly determinant() const;
  Matrix evaluate(const Vector& point) const;

 private:
  Coordinates coords_;
  std::vector<std::vector<Poly>> g_;
};

}  // namespace cxs::xcalc

#include "cxs/fourier.hpp"

#include <stdexcept>

namespace cxs::fourier {

namespace {

std::size_t dim_of(int n) {
  if (n < 1) throw std::invalid_argument("truncation order N must be at least 1");
  return 2 * static_cast<std::size_t>(n);
}

}  // namespace

std::size_t cos_index(int k) { return 2 * static_cast<std::size_t>(k - 1); }
std::size_t sin_index(int k) { return 2 * static_cast<std::size_t>(k - 1) + 1; }

Matrix derivative_matrix(int n) {
  Matrix d(dim_of(n), dim_of(n));
  for (int k = 1; k <= n; ++k) {
    d(sin_index(k), cos_index(k)) = -k;
    d(cos_index(k), sin_index(k)) = k;
  }
  return d;
}

Matrix sqrt_matrix(int n) {
  Matrix x(dim_of(n), dim_of(n));
  for (int k = 1; k <= n; ++k) {
    x(cos_index(k), cos_index(k)) = k;
    x(sin_index(k), sin_index(k)) = k;
  }
  return x;
}

Matrix complex_structure(int n) {
  // X is diagonal, so X⁻¹ is just the reciprocal diagonal.
  Matrix x_inv(dim_of(n), dim_of(n));
  for (int k = 1; k <= n; ++k) {
    x_inv(cos_index(k), cos_index(k)) = Scalar(make_rational(1, k));
    x_inv(sin_index(k), sin_index(k)) = Scalar(make_rational(1, k));
  }
  return x_inv * derivative_matrix(n);
}

WpmCheck w_pm_action(int n) {
  const Matrix d = derivative_matrix(n);
  const Matrix x = sqrt_matrix(n);
  const cstruct::Split split = cstruct::split_pm(cstruct::ComplexStructureOp(complex_structure(n)));
  WpmCheck out;
  out.dim_plus = split.plus.size();
  out.dim_minus = split.minus.size();
  out.plus_ok = out.dim_plus == static_cast<std::size_t>(n);
  out.minus_ok = out.dim_minus == static_cast<std::size_t>(n);
  for (const auto& v : split.plus) out.plus_ok = out.plus_ok && x * v == -Scalar::i() * (d * v);
  for (const auto& v : split.minus) out.minus_ok = out.minus_ok && x * v == Scalar::i() * (d * v);
  return out;
}

bool FourierAudit::all_pass() const {
  return d_antisymmetric && d_squared_diagonal && x_squared && x_commutes && j_squared && j_orthogonal &&
         j_commutes && wpm.ok();
}

FourierAudit audit(int n) {
  FourierAudit a;
  a.n = n;
  const Matrix d = derivative_matrix(n);
  const Matrix x = sqrt_matrix(n);
  const Matrix j = complex_structure(n);
  const Matrix d2 = d * d;
  a.d_antisymmetric = d.transpose() == -d;
  Vector laplacian(d.rows());
  for (int k = 1; k <= n; ++k) laplacian[cos_index(k)] = laplacian[sin_index(k)] = -k * k;
  a.d_squared_diagonal = d2 == Matrix::diagonal(laplacian);
  a.x_squared = x * x == -d2;
  a.x_commutes = commutator(x, d).is_zero();
  a.j_squared = (j * j).is_scalar_multiple_of_identity(Scalar(-1));
  a.j_orthogonal = cstruct::is_orthogonal(cstruct::ComplexStructureOp(j), cstruct::RealQuadraticSpace::euclidean(d.rows()));
  a.j_commutes = commutator(j, d).is_zero() && commutator(j, x).is_zero();
  a.wpm = w_pm_action(n);
  return a;
}

}  // namespace cxs::fourier

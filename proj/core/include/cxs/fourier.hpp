#pragma once

#include <string>
#include <vector>

#include "cxs/cstruct.hpp"

// Mean-zero trigonometric polynomials of degree <= N on the circle, basis
// (cos x, sin x, cos 2x, sin 2x, …, cos Nx, sin Nx). Columns of each matrix are
// the images of the basis functions.

namespace cxs::fourier {

/// d/dx: cos kx ↦ −k sin kx, sin kx ↦ k cos kx. Throws std::invalid_argument for N < 1.
Matrix derivative_matrix(int n);

/// X = sqrt(−d²/dx²): multiplies both frequency-k basis functions by k.
Matrix sqrt_matrix(int n);

/// J = X⁻¹ d/dx: cos kx ↦ −sin kx, sin kx ↦ cos kx.
Matrix complex_structure(int n);

/// Index of cos kx (sine = +1) in the basis, k >= 1.
std::size_t cos_index(int k);
std::size_t sin_index(int k);

struct WpmCheck {
  std::size_t dim_plus = 0;
  std::size_t dim_minus = 0;
  bool plus_ok = false;   // X v = −i D v on W₊
  bool minus_ok = false;  // X v = +i D v on W₋
  bool ok() const { return plus_ok && minus_ok; }
};

/// Uses cstruct::split_pm on J and checks how X acts on each eigenbasis vector.
WpmCheck w_pm_action(int n);

struct FourierAudit {
  int n = 0;
  bool d_antisymmetric = false;
  bool d_squared_diagonal = false;
  bool x_squared = false;       // X² = −D²
  bool x_commutes = false;      // XD = DX
  bool j_squared = false;       // J² = −id
  bool j_orthogonal = false;
  bool j_commutes = false;      // with D and X
  WpmCheck wpm;
  bool all_pass() const;
};

FourierAudit audit(int n);

}  // namespace cxs::fourier

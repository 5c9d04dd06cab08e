#pragma once

#include <array>
#include <cstdint>
#include <string>

// Real Clifford algebras as matrix algebras, read off the spinorial clock:
// the hour h = (l - k) mod 8 fixes the base algebra A_h and
// Cl(k,l) = A_h(2^{(k+l-ν_h)/2}) with dim_R A_h = 2^{ν_h}.

namespace cxs::clock {

enum class Base { R, C, H, R2, H2 };

/// "R", "C", "H", "2R", "2H".
std::string to_string(Base b);
/// log2 of the real dimension of the base algebra.
int base_log_dim(Base b);

struct MatrixAlgebraType {
  Base base = Base::R;
  std::uint64_t size = 1;  // N in base(N); a power of two

  /// dim_R = dim_R(base) * N^2.
  std::uint64_t real_dimension() const;
  /// e.g. "H(8)", "2R(1)".
  std::string str() const;

  friend bool operator==(const MatrixAlgebraType&, const MatrixAlgebraType&) = default;
};

struct ClockHour {
  int h;
  Base base;
  int nu;
};

/// A_0..A_7 = R, C, H, 2H, H, C, R, 2R with ν = 0,1,2,3,2,1,0,1.
const std::array<ClockHour, 8>& clock_table();

/// (l - k) mod 8 in 0..7.
int hour(int k, int l);

/// Throws std::invalid_argument for negative k or l.
MatrixAlgebraType classify(int k, int l);

/// Type of the even subalgebra Cl⁰(k,l): Cl(k,l-1) for l >= 1, Cl(0,k-1) for l = 0.
/// Throws std::invalid_argument when k + l < 1.
MatrixAlgebraType even_subalgebra(int k, int l);

/// k + l2 ≡ k2 + l (mod 8).
bool same_type(int k, int l, int k2, int l2);

/// (h1 + h2) mod 8; throws std::invalid_argument for hours outside 0..7.
int brauer_wall_add(int h1, int h2);

/// "Cl(7,1) = H(8), hour 2, even part C(8)".
std::string describe(int k, int l);

}  // namespace cxs::clock

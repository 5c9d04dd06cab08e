#include "cxs/clock.hpp"

#include <stdexcept>

namespace cxs::clock {

std::string to_string(Base b) {
  switch (b) {
    case Base::R: return "R";
    case Base::C: return "C";
    case Base::H: return "H";
    case Base::R2: return "2R";
    case Base::H2: return "2H";
  }
  return "?";
}

int base_log_dim(Base b) {
  switch (b) {
    case Base::R: return 0;
    case Base::C: return 1;
    case Base::H: return 2;
    case Base::R2: return 1;
    case Base::H2: return 3;
  }
  return 0;
}

std::uint64_t MatrixAlgebraType::real_dimension() const {
  return (std::uint64_t{1} << base_log_dim(base)) * size * size;
}

std::string MatrixAlgebraType::str() const { return to_string(base) + "(" + std::to_string(size) + ")"; }

const std::array<ClockHour, 8>& clock_table() {
  static const std::array<ClockHour, 8> table{{
      {0, Base::R, 0},
      {1, Base::C, 1},
      {2, Base::H, 2},
      {3, Base::H2, 3},
      {4, Base::H, 2},
      {5, Base::C, 1},
      {6, Base::R, 0},
      {7, Base::R2, 1},
  }};
  return table;
}

int hour(int k, int l) { return (((l - k) % 8) + 8) % 8; }

MatrixAlgebraType classify(int k, int l) {
  if (k < 0 || l < 0) throw std::invalid_argument("signature counts must be non-negative");
  if (k + l > 62) throw std::invalid_argument("signature too large to classify");
  const ClockHour& entry = clock_table()[static_cast<std::size_t>(hour(k, l))];
  // k + l - ν_h is always even: ν_h ≡ h ≡ l - k ≡ k + l (mod 2).
  int log_size = (k + l - entry.nu) / 2;
  return {entry.base, std::uint64_t{1} << log_size};
}

MatrixAlgebraType even_subalgebra(int k, int l) {
  if (k < 0 || l < 0) throw std::invalid_argument("signature counts must be non-negative");
  if (k + l < 1) throw std::invalid_argument("even subalgebra needs k + l >= 1");
  if (l >= 1) return classify(k, l - 1);
  // Cl⁰(V, g) and Cl⁰(V, -g) coincide, so Cl⁰(k,0) = Cl⁰(0,k) = Cl(0,k-1).
  return classify(0, k - 1);
}

bool same_type(int k, int l, int k2, int l2) { return ((k + l2) - (k2 + l)) % 8 == 0; }

int brauer_wall_add(int h1, int h2) {
  if (h1 < 0 || h1 > 7 || h2 < 0 || h2 > 7) throw std::invalid_argument("hours must lie in 0..7");
  return (h1 + h2) % 8;
}

std::string describe(int k, int l) {
  std::string s = "Cl(" + std::to_string(k) + "," + std::to_string(l) + ") = " + classify(k, l).str() + ", hour " +
                  std::to_string(hour(k, l));
  if (k + l >= 1) s += ", even part " + even_subalgebra(k, l).str();
  return s;
}

}  // namespace cxs::clock

#pragma once

#include <cstdint>
#include <random>

#include "cxs/matrix.hpp"

// Seeded sampling of small exact numbers. All randomized sweeps in cxs draw
// from std::mt19937_64 so a seed reproduces a run.

namespace cxs {

using Rng = std::mt19937_64;

/// a/b with |a| <= num_max, 1 <= b <= den_max.
inline Rational random_rational(Rng& rng, long num_max = 3, long den_max = 4) {
  std::uniform_int_distribution<long> num(-num_max, num_max);
  std::uniform_int_distribution<long> den(1, den_max);
  long a = num(rng);
  long b = den(rng);
  return make_rational(a, b);
}

inline Scalar random_scalar(Rng& rng, long num_max = 3, long den_max = 4) {
  Rational re = random_rational(rng, num_max, den_max);
  Rational im = random_rational(rng, num_max, den_max);
  return Scalar(re, im);
}

/// Random vector, redrawn until nonzero.
inline Vector random_vector(Rng& rng, std::size_t n, long num_max = 3, long den_max = 4) {
  Vector v(n);
  do {
    for (auto& x : v) x = random_scalar(rng, num_max, den_max);
  } while (is_zero(v));
  return v;
}

}  // namespace cxs

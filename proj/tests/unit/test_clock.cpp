#include <doctest.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cxs/clock.hpp"

using namespace cxs::clock;

namespace {

// Oracle 1, brute force. Blade signs are recomputed here from scratch.
//  - m even: the algebra is central simple; m odd: the center is span{1, η},
//    split (η² = 1) or complex (η² = −1).
//  - R versus H: τ(x²) with τ the coefficient of 1 has signature Σ_A sign(e_A²),
//    positive for matrix algebras over R and negative over H.
int square_sign(int k, int l, unsigned a) {
  int p = __builtin_popcount(a);
  int sign = (p * (p - 1) / 2) % 2 ? -1 : 1;
  for (int i = 0; i < k + l; ++i)
    if ((a >> i & 1) && i >= k) sign = -sign;
  return sign;
}

bool commutes(unsigned a, unsigned b) {
  // e_A e_B = (−1)^{|A||B| − |A∩B|} e_B e_A
  const int s = __builtin_popcount(a) * __builtin_popcount(b) - __builtin_popcount(a & b);
  return s % 2 == 0;
}

MatrixAlgebraType brute_force(int k, int l) {
  const int m = k + l;
  const unsigned n = 1u << m;
  int center = 0;
  for (unsigned a = 0; a < n; ++a) {
    bool central = true;
    for (unsigned b = 0; b < n && central; ++b) central = commutes(a, b);
    center += central;
  }
  long sigma = 0;
  for (unsigned a = 0; a < n; ++a) sigma += square_sign(k, l, a);

  auto isqrt = [](std::uint64_t x) {
    std::uint64_t r = 0;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
  };
  const std::uint64_t dim = std::uint64_t{1} << m;
  if (center == 1) {
    if (sigma > 0) return {Base::R, isqrt(dim)};
    return {Base::H, isqrt(dim / 4)};
  }
  REQUIRE(center == 2);
  const unsigned top = n - 1;
  if (square_sign(k, l, top) == -1) {
    CHECK(sigma == 0);
    return {Base::C, isqrt(dim / 2)};
  }
  if (sigma > 0) return {Base::R2, isqrt(dim / 2)};
  return {Base::H2, isqrt(dim / 8)};
}

// Oracle 2: only the base cases and the stated recursions, filled in to a fixed point.
//   Cl(k+1,l+1) = Cl(k,l) ⊗ R(2);  Cl(k+4,l) = Cl(k,l+4);  hours add under ⊗_gr.
std::map<std::pair<int, int>, MatrixAlgebraType> recursion_table(int max_m) {
  std::map<std::pair<int, int>, MatrixAlgebraType> t;
  t[{0, 0}] = {Base::R, 1};
  t[{1, 0}] = {Base::R2, 1};
  t[{0, 1}] = {Base::C, 1};
  t[{0, 2}] = {Base::H, 1};
  bool changed = true;
  while (changed) {
    changed = false;
    auto put = [&](int k, int l, MatrixAlgebraType v) {
      if (k < 0 || l < 0 || k + l > max_m) return;
      auto [it, inserted] = t.try_emplace({k, l}, v);
      if (inserted) changed = true;
      else REQUIRE(it->second == v);
    };
    for (auto [key, v] : std::map(t)) {
      auto [k, l] = key;
      put(k + 1, l + 1, {v.base, v.size * 2});
      if (v.size % 2 == 0) put(k - 1, l - 1, {v.base, v.size / 2});
      if (k >= 4) put(k - 4, l + 4, v);
      if (l >= 4) put(k + 4, l - 4, v);
    }
  }
  return t;
}

int oracle_hour(int k, int l) {
  // hour(1,0) = 7, hour(0,1) = 1, additive
  return ((7 * k + l) % 8 + 8) % 8;
}

}  // namespace

TEST_SUITE("clock") {
  TEST_CASE("anchors") {
    CHECK(classify(3, 1) == MatrixAlgebraType{Base::R, 4});
    CHECK(classify(4, 2) == MatrixAlgebraType{Base::R, 8});
    CHECK(classify(7, 1) == MatrixAlgebraType{Base::H, 8});
    CHECK(classify(0, 0) == MatrixAlgebraType{Base::R, 1});
    CHECK(classify(1, 0) == MatrixAlgebraType{Base::R2, 1});
    CHECK(classify(0, 1) == MatrixAlgebraType{Base::C, 1});
    CHECK(classify(0, 2) == MatrixAlgebraType{Base::H, 1});
    CHECK(classify(7, 1).str() == "H(8)");
    CHECK(describe(7, 1).rfind("Cl(7,1) = H(8)", 0) == 0);
    CHECK_THROWS_AS(classify(-1, 0), std::invalid_argument);
  }

  TEST_CASE("brute force oracle, all k+l <= 8") {
    int count = 0;
    for (int m = 0; m <= 8; ++m)
      for (int k = 0; k <= m; ++k) {
        const int l = m - k;
        CAPTURE(k);
        CAPTURE(l);
        CHECK(classify(k, l) == brute_force(k, l));
        CHECK(hour(k, l) == oracle_hour(k, l));
        CHECK(classify(k, l).real_dimension() == (std::uint64_t{1} << m));
        ++count;
      }
    CHECK(count == 45);
  }

  TEST_CASE("recursion oracle agrees where it is determined") {
    const auto table = recursion_table(8);
    for (const auto& [key, v] : table) CHECK(classify(key.first, key.second) == v);
    // Hour addition carries the base algebra to the graded products the recursions miss.
    for (int m = 0; m <= 8; ++m)
      for (int k = 0; k <= m; ++k) {
        const int l = m - k;
        for (const auto& [key, v] : table)
          if (hour(key.first, key.second) == hour(k, l)) CHECK(classify(k, l).base == v.base);
      }
  }

  TEST_CASE("clock table") {
    const Base expect[8] = {Base::R, Base::C, Base::H, Base::H2, Base::H, Base::C, Base::R, Base::R2};
    const int nu[8] = {0, 1, 2, 3, 2, 1, 0, 1};
    for (int h = 0; h < 8; ++h) {
      CHECK(clock_table()[h].base == expect[h]);
      CHECK(clock_table()[h].nu == nu[h]);
      CHECK(base_log_dim(expect[h]) == nu[h]);
    }
  }

  TEST_CASE("even subalgebra") {
    CHECK(even_subalgebra(0, 1) == MatrixAlgebraType{Base::R, 1});
    CHECK(even_subalgebra(7, 1) == classify(7, 0));
    CHECK(even_subalgebra(7, 1).real_dimension() == 128);
    CHECK(same_type(0, 0, 0, 0));
    for (int m = 1; m <= 8; ++m)
      for (int k = 0; k <= m; ++k) {
        const int l = m - k;
        CHECK(even_subalgebra(k, l).real_dimension() * 2 == (std::uint64_t{1} << m));
        CHECK(even_subalgebra(k, l) == brute_force(l >= 1 ? k : 0, l >= 1 ? l - 1 : k - 1));
      }
    // Cl(3,0) and Cl(1,2) are not of the same type, yet both are C(2)
    CHECK_FALSE(same_type(3, 0, 1, 2));
    CHECK(even_subalgebra(3, 1) == MatrixAlgebraType{Base::C, 2});
    CHECK(even_subalgebra(1, 3) == even_subalgebra(3, 1));
    CHECK_THROWS_AS(even_subalgebra(0, 0), std::invalid_argument);
  }

  TEST_CASE("same_type is an equivalence relation") {
    std::vector<std::pair<int, int>> sigs;
    for (int m = 0; m <= 8; ++m)
      for (int k = 0; k <= m; ++k) sigs.push_back({k, m - k});
    CHECK(same_type(7, 1, 1, 3));
    for (auto [k, l] : sigs) CHECK(same_type(k, l, k, l));
    for (auto [k, l] : sigs)
      for (auto [k2, l2] : sigs) {
        const bool ab = same_type(k, l, k2, l2);
        REQUIRE(ab == same_type(k2, l2, k, l));
        if (ab) REQUIRE(classify(k, l).base == classify(k2, l2).base);
        if (!ab) continue;
        for (auto [k3, l3] : sigs)
          if (same_type(k2, l2, k3, l3)) REQUIRE(same_type(k, l, k3, l3));
      }
    for (int k = 0; k <= 4; ++k)
      for (int l = 0; l + k <= 4; ++l) CHECK(same_type(k + 4, l, k, l + 4));
  }

  TEST_CASE("brauer wall addition") {
    CHECK(brauer_wall_add(hour(0, 1), hour(0, 1)) == hour(0, 2));
    CHECK(classify(0, 2).base == Base::H);
    for (int h = 0; h < 8; ++h) CHECK(brauer_wall_add(h, 0) == h);
    CHECK(hour(1, 1) == 0);
    for (int m = 0; m <= 6; ++m)
      for (int k = 0; k <= m; ++k) {
        CHECK(brauer_wall_add(hour(k, m - k), hour(1, 1)) == hour(k + 1, m - k + 1));
        CHECK(classify(k + 1, m - k + 1).base == classify(k, m - k).base);
      }
    CHECK_THROWS_AS(brauer_wall_add(8, 0), std::invalid_argument);
  }
}

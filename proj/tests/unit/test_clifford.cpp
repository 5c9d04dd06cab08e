#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "cxs/clifford.hpp"
#include "cxs/cstruct.hpp"
#include "cxs/random.hpp"

using namespace cxs;
using namespace cxs::clifford;

namespace {

// Oracle: multiply index lists by bubble sorting the concatenation and cancelling
// adjacent equal generators.
int oracle_product_sign(const Signature& sig, Blade a, Blade b) {
  std::vector<int> idx;
  for (int i = 0; i < sig.dim(); ++i)
    if (a >> i & 1) idx.push_back(i);
  for (int i = 0; i < sig.dim(); ++i)
    if (b >> i & 1) idx.push_back(i);
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p + 1 < idx.size(); ++p) {
      if (idx[p] > idx[p + 1]) {
        std::swap(idx[p], idx[p + 1]);
        sign = -sign;
        changed = true;
      } else if (idx[p] == idx[p + 1]) {
        sign *= sig.square(idx[p]);
        idx.erase(idx.begin() + static_cast<long>(p), idx.begin() + static_cast<long>(p) + 2);
        changed = true;
        break;
      }
    }
  }
  return sign;
}

Multivector random_multivector(Rng& rng, const Signature& sig, int terms = 4) {
  Multivector m(sig);
  const Blade top = (Blade{1} << sig.dim()) - 1;
  for (int t = 0; t < terms; ++t) m.add_term(static_cast<Blade>(rng() & top), random_scalar(rng, 2, 2));
  return m;
}

}  // namespace

TEST_SUITE("clifford") {
  TEST_CASE("generator squares and anticommutation") {
    const Signature s11(1, 1);
    const auto e1 = Multivector::generator(s11, 1), e2 = Multivector::generator(s11, 2);
    CHECK(e1 * e1 == Multivector::scalar(s11, 1));
    CHECK(e2 * e2 == Multivector::scalar(s11, -1));
    for (int m = 2; m <= 6; ++m)
      for (int k = 0; k <= m; ++k) {
        const Signature sig(k, m - k);
        for (int a = 1; a <= m; ++a)
          for (int b = a + 1; b <= m; ++b) {
            const auto ea = Multivector::generator(sig, a), eb = Multivector::generator(sig, b);
            CHECK((ea * eb + eb * ea).is_zero());
          }
      }
  }

  TEST_CASE("blade sign matches the oracle") {
    for (int m = 0; m <= 6; ++m)
      for (int k = 0; k <= m; ++k) {
        const Signature sig(k, m - k);
        const Blade n = Blade{1} << m;
        for (Blade a = 0; a < n; ++a)
          for (Blade b = 0; b < n; ++b) REQUIRE(blade_product_sign(sig, a, b) == oracle_product_sign(sig, a, b));
      }
  }

  TEST_CASE("associativity on random triples") {
    Rng rng(7);
    for (int m = 1; m <= 6; ++m)
      for (int k = 0; k <= m; ++k) {
        const Signature sig(k, m - k);
        for (int t = 0; t < 300; ++t) {
          const auto a = random_multivector(rng, sig), b = random_multivector(rng, sig), c = random_multivector(rng, sig);
          REQUIRE((a * b) * c == a * (b * c));
        }
      }
  }

  TEST_CASE("eta squared") {
    const Signature s31(3, 1), s20(2, 0), s00(0, 0);
    CHECK(eta_squared(s31) == -1);
    CHECK(eta_squared(s20) == -1);
    CHECK(volume_element(s00) == Multivector::scalar(s00, 1));
    CHECK(eta_squared(s00) == 1);
    for (int m = 0; m <= 8; ++m)
      for (int k = 0; k <= m; ++k) {
        const Signature sig(k, m - k);
        // direct product of the generators, squared
        Multivector eta = Multivector::scalar(sig, 1);
        for (int mu = 1; mu <= m; ++mu) eta = eta * Multivector::generator(sig, mu);
        CHECK(eta == volume_element(sig));
        CHECK(eta * eta == Multivector::scalar(sig, eta_squared(sig)));
      }
  }

  TEST_CASE("kappa examples and recursion") {
    const Signature s21(2, 1);
    CHECK(kappa(Multivector::scalar(s21, 1)) == ExteriorElement::scalar(s21, 1));
    const auto e1 = Multivector::generator(s21, 1), e2 = Multivector::generator(s21, 2),
               e3 = Multivector::generator(s21, 3);
    CHECK(kappa(e1 * e2) == wedge(kappa(e1), kappa(e2)));
    CHECK(kappa(e1 * e1) == ExteriorElement::scalar(s21, 1));
    CHECK(kappa(e3 * e3) == ExteriorElement::scalar(s21, -1));

    Rng rng(19);
    for (int m = 1; m <= 5; ++m)
      for (int k = 0; k <= m; ++k) {
        const Signature sig(k, m - k);
        for (int t = 0; t < 40; ++t) {
          const auto a = random_multivector(rng, sig);
          const int mu = 1 + static_cast<int>(rng() % static_cast<unsigned>(m));
          const auto v = Multivector::generator(sig, mu);
          // κ(v a) = v ∧ κ(a) + g(v) ⌟ κ(a)
          CHECK(kappa(v * a) == wedge(kappa(v), kappa(a)) + contract_generator(mu, kappa(a)));
          for (int p = 0; p <= m; ++p) {
            const auto part = a.grade_part(p);
            const auto image = kappa(part);
            CHECK(image.is_even() == (part.is_zero() || p % 2 == 0));
          }
          CHECK(kappa_inv(kappa(a)) == a);
        }
      }
  }

  TEST_CASE("hodge star examples") {
    const Signature s02(0, 2);
    CHECK(hodge_star(ExteriorElement::scalar(s02, 1)) == ExteriorElement::blade(s02, 0b11));

    const Signature s31(3, 1);
    for (Blade b : blades_of_grade(4, 2)) {
      const auto w = ExteriorElement::blade(s31, b);
      CHECK(hodge_star(hodge_star(w)) == -w);
    }
    const Signature s20(2, 0);
    for (Blade b : blades_of_grade(2, 1)) {
      const auto w = ExteriorElement::blade(s20, b);
      CHECK(hodge_star(hodge_star(w)) == -w);
    }
  }

  TEST_CASE("duality complex structures") {
    const auto d31 = duality_complex_structure(Signature(3, 1));
    REQUIRE(d31);
    CHECK(d31->basis.size() == 6);
    CHECK(d31->grades == std::vector<int>{2});

    const auto d01 = duality_complex_structure(Signature(0, 1));
    REQUIRE(d01);
    CHECK(d01->basis.size() == 2);
    CHECK(d01->grades == std::vector<int>{0, 1});

    CHECK(duality_complex_structure(Signature(2, 0)));
    CHECK_FALSE(duality_complex_structure(Signature(1, 1)));

    for (auto [k, l] : std::vector<std::pair<int, int>>{{0, 2}, {3, 1}, {1, 3}, {0, 6}, {0, 1}, {2, 3}, {2, 0}}) {
      const auto d = duality_complex_structure(Signature(k, l));
      REQUIRE(d);
      CHECK((d->j * d->j).is_scalar_multiple_of_identity(Scalar(-1)));
      CHECK_NOTHROW(cstruct::ComplexStructureOp(d->j));
    }
    for (int m = 0; m <= 8; ++m)
      for (int k = 0; k <= m; ++k) {
        const Signature sig(k, m - k);
        CHECK(duality_complex_structure(sig).has_value() == (eta_squared(sig) == -1));
      }
  }

  TEST_CASE("signature bounds") {
    CHECK_THROWS_AS(Signature(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Signature(7, 6), std::invalid_argument);
    CHECK_THROWS_AS(Multivector::generator(Signature(1, 0), 2), std::out_of_range);
  }
}

#include <doctest.h>

#include <stdexcept>

#include "cxs/optical.hpp"

using namespace cxs;
using namespace cxs::optical;
using xcalc::parse_poly;

namespace {

const Coordinates& cr() { return cr_coordinates(); }
Poly C(const std::string& s) { return parse_poly(s, cr_coordinates()); }
Poly Q(const std::string& s) { return parse_poly(s, chart_coordinates()); }
Poly R3(const std::string& s) { return parse_poly(s, r3_coordinates()); }

PolyForm du() { return PolyForm::dx(cr(), "u"); }
PolyForm dz() { return PolyForm::dx(cr(), "x") + Scalar::i() * PolyForm::dx(cr(), "y"); }
PolyForm dzb() { return PolyForm::dx(cr(), "x") - Scalar::i() * PolyForm::dx(cr(), "y"); }

const CRData heis{parse_poly("-i*(x + i*y)", cr_coordinates())};
const CRData flat{Poly(cr_coordinates())};

OpticalChart chart_for(const CRData& data) {
  return rt_metric(data, Poly(chart_coordinates(), Scalar(1)), PolyForm::dx(chart_coordinates(), "r"));
}

Vector random_point(Rng& rng) {
  Vector p(4);
  for (auto& x : p) x = Scalar(random_rational(rng));
  return p;
}

}  // namespace

TEST_SUITE("optical") {
  TEST_CASE("CR frames") {
    const auto f0 = cr_frame(flat);
    CHECK(f0.lambda == du());
    CHECK(f0.z == Scalar(make_rational(1, 2)) * (PolyVField::partial(cr(), "x") + Scalar::i() * PolyVField::partial(cr(), "y")));
    CHECK(levi_form(f0).is_zero());

    const auto fh = cr_frame(heis);
    // λ = du + i z̄ dz − i z dz̄
    const Poly z = C("x + i*y"), zb = C("x - i*y");
    CHECK(fh.lambda == du() + (Scalar::i() * zb) * dz() + (Scalar(-1) * Scalar::i() * z) * dzb());
    CHECK(fh.lambda == du() + C("2*y") * PolyForm::dx(cr(), "x") + C("-2*x") * PolyForm::dx(cr(), "y"));
    CHECK_FALSE(levi_form(fh).is_zero());
    CHECK(check_frame(fh).ok());
    CHECK(contract(fh.z, fh.lambda).is_zero());
  }

  TEST_CASE("CR functions") {
    CHECK(cr_function_check(flat, C("x + i*y")).is_zero());
    CHECK(cr_function_check(heis, C("u - i*(x^2 + y^2)")).is_zero());
    CHECK(cr_function_check(heis, C("x - i*y")) == Poly(cr(), Scalar(1)));
  }

  TEST_CASE("canonical sections") {
    const Coordinates ab{"a", "b"};
    const auto s0 = canonical_section(flat, C("x + i*y"), C("u"), Poly(ab, Scalar(1)));
    CHECK(s0.ok());
    CHECK(s0.f_prime == wedge(dz(), du()));
    const Poly w = C("u - i*(x^2 + y^2)");
    CHECK(canonical_section(heis, C("x + i*y"), w, Poly(ab, Scalar(1))).ok());
    CHECK(canonical_section(heis, C("x + i*y"), w, parse_poly("a^2", ab)).ok());
    CHECK(canonical_section(heis, C("x + i*y"), w, parse_poly("a*b + 3", ab)).ok());
    CHECK_THROWS_AS(canonical_section(heis, C("x + i*y"), C("u"), Poly(ab, Scalar(1))), std::invalid_argument);
  }

  TEST_CASE("frame changes") {
    const auto fh = cr_frame(heis);
    const Poly one(cr(), Scalar(1)), zero(cr());
    const auto same = frame_change(fh, one, one, zero);
    CHECK(same.ok());
    CHECK(same.frame.lambda == fh.lambda);
    const auto scaled = frame_change(fh, Poly(cr(), Scalar(2)), Poly(cr(), Scalar::i()), zero);
    CHECK(wedge(scaled.frame.lambda, scaled.frame.mu) ==
          (Scalar(2) * Scalar::i()) * wedge(fh.lambda, fh.mu));
    CHECK(frame_change(fh, one, one, C("x + i*y")).ok());
    CHECK_THROWS_AS(frame_change(fh, Poly(cr(), Scalar::i()), one, zero), std::invalid_argument);

    Rng rng(41);
    for (int t = 0; t < 20; ++t) {
      Poly a = random_poly(cr(), 2, rng);
      a = a + a.conj() + Poly(cr(), Scalar(5));
      const Poly b = random_poly(cr(), 2, rng) + Poly(cr(), Scalar(1));
      const Poly c = random_poly(cr(), 2, rng);
      CHECK(frame_change(fh, a, b, c).ok());
    }
  }

  TEST_CASE("optical metrics") {
    Rng rng(42);
    const auto c0 = chart_for(flat);
    const auto pr = PolyVField::partial(chart_coordinates(), "r");
    CHECK(c0.metric(pr, pr).is_zero());
    CHECK(rt_audit(c0, 10, rng).ok());
    const auto ch = chart_for(heis);
    CHECK(ch.metric(pr, pr).is_zero());
    const auto sig = signature_sample(ch, 10, rng);
    CHECK(sig.ok());
    CHECK(sig.points == 10);
    CHECK_THROWS_AS(rt_metric(flat, Poly(chart_coordinates(), Scalar(1)), PolyForm::dx(chart_coordinates(), "u")),
                    std::invalid_argument);
    CHECK_THROWS_AS(rt_metric(flat, Poly(chart_coordinates(), Scalar::i()), PolyForm::dx(chart_coordinates(), "r")),
                    std::invalid_argument);
    // non-constant P and a tilted ξ
    const auto tilted = rt_metric(heis, Q("1 + x^2"), PolyForm::dx(chart_coordinates(), "r") + Q("u") * PolyForm::dx(chart_coordinates(), "u"));
    CHECK(rt_audit(tilted, 10, rng).ok());
  }

  TEST_CASE("null planes") {
    for (const auto& data : {flat, heis}) {
      const auto chart = chart_for(data);
      const auto n = null_plane_from_chart(chart);
      CHECK(total_nullity(n, chart.metric));
      CHECK(intersection_is_k(n, chart.k));
      CHECK(integrability_check(n));
      auto perturbed = n;
      perturbed.span[1] = perturbed.span[1] + PolyVField::partial(chart_coordinates(), "u");
      CHECK_FALSE(total_nullity(perturbed, chart.metric));
    }
    const Coordinates c3{"x", "y", "u"};
    NullPlaneData twisted{c3, {PolyVField::partial(c3, "x") + parse_poly("u", c3) * PolyVField::partial(c3, "y"),
                               PolyVField::partial(c3, "u")}};
    CHECK_FALSE(integrability_check(twisted));
    NullPlaneData coords{c3, {PolyVField::partial(c3, "x"), PolyVField::partial(c3, "y")}};
    CHECK(integrability_check(coords));
  }

  TEST_CASE("random charts") {
    Rng rng(43);
    for (int t = 0; t < 20; ++t) {
      const CRData data{random_poly(cr(), 3, rng)};
      CHECK(check_frame(cr_frame(data)).ok());
      const auto chart = chart_for(data);
      const auto n = null_plane_from_chart(chart);
      CHECK(total_nullity(n, chart.metric));
      CHECK(intersection_is_k(n, chart.k));
      CHECK(integrability_check(n));
    }
  }

  TEST_CASE("2-form of the null plane in an optical chart") {
    Rng rng(44);
    const auto chart = chart_for(heis);
    const auto n = null_plane_from_chart(chart);
    const auto frame = rt_point_frame(chart, random_point(rng));
    const auto dual = null_2form(n, chart.metric, frame);
    CHECK(dual.iota == Scalar::i());
    CHECK(dual.f_nonzero);
    CHECK(dual.sign != 0);
    CHECK(dual.f_wedge_fbar_zero);
  }

  TEST_CASE("pointwise star squares to -1 on 2-forms in (3,1)") {
    const auto flat4 = flat_chart(clifford::Signature(3, 1));
    for (clifford::Blade b : clifford::blades_of_grade(4, 2)) {
      const std::map<clifford::Blade, Scalar> w{{b, Scalar(1)}};
      const auto twice = point_hodge_star(point_hodge_star(w, flat4.frame), flat4.frame);
      CHECK(twice == std::map<clifford::Blade, Scalar>{{b, Scalar(-1)}});
    }
  }

  TEST_CASE("null planes from spinors") {
    Rng rng(45);
    for (auto [k, l] : std::vector<std::pair<int, int>>{{4, 0}, {3, 1}, {2, 2}}) {
      const auto rep = spinor::build_gamma(k, l);
      const auto pair = spinor::solve_intertwiners(rep);
      const auto flat4 = flat_chart(rep.sig);
      const auto w = spinor::weyl_split(rep);
      for (int side = 0; side < 2; ++side)
        for (const auto& phi : side == 0 ? w.plus : w.minus) {
          const auto plane = null_plane_from_spinor(rep, pair, phi);
          CHECK(plane.basis.size() == 2);
          CHECK(total_nullity(plane.plane, flat4.metric));
          const auto dual = null_2form(plane.plane, flat4.metric, flat4.frame);
          CHECK(dual.sign == (side == 0 ? 1 : -1));
          if (l == 1) {
            CHECK(plane.contains_real_null);
            CHECK(dual.f_wedge_fbar_zero);
          }
          if (l == 0) {
            CHECK(plane.transverse);
            CHECK_FALSE(plane.pairing.is_zero());
            CHECK_FALSE(dual.f_wedge_fbar_zero);
          }
        }
    }
    // (2,2): a Weyl–Majorana spinor gives a real plane
    const auto rep = spinor::build_gamma(2, 2);
    const auto pair = spinor::solve_intertwiners(rep);
    const auto w = spinor::weyl_split(rep);
    Vector phi = w.plus[0] + spinor::charge_conjugate(w.plus[0], pair.c);
    if (is_zero(phi)) phi = Scalar::i() * w.plus[0] + spinor::charge_conjugate(Scalar::i() * w.plus[0], pair.c);
    const auto plane = null_plane_from_spinor(rep, pair, phi);
    CHECK(plane.pairing.is_zero());
    CHECK(plane.real_plane);

    CHECK_THROWS_AS(null_plane_from_spinor(rep, pair, Vector(4)), std::invalid_argument);
    CHECK_THROWS_AS(null_plane_from_spinor(rep, pair, w.plus[0] + w.minus[0]), std::invalid_argument);
  }

  TEST_CASE("conjecture verifier") {
    const auto& c = r3_coordinates();
    const PolyVField f(c, {R3("i"), R3("-1"), R3("0")});
    const auto r = conjecture_verify(f, R3("x + i*y"), R3("u"));
    CHECK(r.verified());
    CHECK(cross(f, f.conj()) == PolyVField(c, {R3("0"), R3("0"), R3("-2*i")}));

    const Poly z = R3("x + i*y"), w = R3("u - i*(x^2 + y^2)");
    const auto fh = cross(gradient(z), gradient(w));
    CHECK(conjecture_verify(fh, z, w).verified());
    CHECK(divergence(fh).is_zero());

    const PolyVField bad(c, {R3("1"), R3("0"), R3("0")});
    const auto rb = conjecture_verify(bad, R3("x + i*y"), R3("u"));
    CHECK_FALSE(rb.verified());
    CHECK_FALSE(rb.matches);
  }
}

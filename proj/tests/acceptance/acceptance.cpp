// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cxs/clifford.hpp"
#include "cxs/clock.hpp"
#include "cxs/dirac.hpp"
#include "cxs/fourier.hpp"
#include "cxs/optical.hpp"
#include "cxs/spinor.hpp"

using namespace cxs;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) note = what;
    pass = pass && ok;
  }
};

// Classical periodicity, built up from Cl(0,0) = R, Cl(1,0) = R+R, Cl(0,1) = C:
//   Cl(k+2,l) = Cl(l,k) ⊗ R(2),  Cl(k,l+2) = Cl(l,k) ⊗ H,  Cl(k+1,l+1) = Cl(k,l) ⊗ R(2).
clock::MatrixAlgebraType times_h(clock::MatrixAlgebraType a) {
  using clock::Base;
  switch (a.base) {
    case Base::R: return {Base::H, a.size};
    case Base::R2: return {Base::H2, a.size};
    case Base::C: return {Base::C, a.size * 2};
    case Base::H: return {Base::R, a.size * 4};
    case Base::H2: return {Base::R2, a.size * 4};
  }
  return a;
}

std::map<std::pair<int, int>, clock::MatrixAlgebraType> recursion_oracle(int max_m) {
  using clock::Base;
  std::map<std::pair<int, int>, clock::MatrixAlgebraType> t;
  t[{0, 0}] = {Base::R, 1};
  t[{1, 0}] = {Base::R2, 1};
  t[{0, 1}] = {Base::C, 1};
  for (int m = 2; m <= max_m; ++m)
    for (int k = 0; k <= m; ++k) {
      const int l = m - k;
      if (k >= 2) {
        auto a = t.at({l, k - 2});
        t[{k, l}] = {a.base, a.size * 2};
      } else if (l >= 2) {
        t[{k, l}] = times_h(t.at({l - 2, k}));
      } else {
        auto a = t.at({k - 1, l - 1});
        t[{k, l}] = {a.base, a.size * 2};
      }
    }
  return t;
}

int eta_squared_direct(int k, int l) {
  // η² = (reversal sign) · Π e_i²
  const int m = k + l;
  int s = (m * (m - 1) / 2) % 2 ? -1 : 1;
  return l % 2 ? -s : s;
}

Outcome clock_oracle() {
  Outcome o;
  using clock::Base;
  using clock::MatrixAlgebraType;
  const auto table = recursion_oracle(8);
  int count = 0;
  for (int m = 0; m <= 8; ++m)
    for (int k = 0; k <= m; ++k) {
      const int l = m - k;
      auto it = table.find({k, l});
      o.require(it != table.end(), "oracle missing a signature");
      if (it == table.end()) continue;
      o.require(clock::classify(k, l) == it->second, "Cl(" + std::to_string(k) + "," + std::to_string(l) + ") disagrees");
      ++count;
    }
  o.require(count == 45, "expected 45 signatures");
  o.require(clock::classify(3, 1) == MatrixAlgebraType{Base::R, 4}, "Cl(3,1) != R(4)");
  o.require(clock::classify(4, 2) == MatrixAlgebraType{Base::R, 8}, "Cl(4,2) != R(8)");
  o.require(clock::classify(7, 1) == MatrixAlgebraType{Base::H, 8}, "Cl(7,1) != H(8)");
  o.note = o.pass ? std::to_string(count) + " signatures" : o.note;
  return o;
}

bool relations(const std::vector<Matrix>& g, int k) {
  const std::size_t d = g[0].rows();
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = a; b < g.size(); ++b) {
      const Matrix ac = g[a] * g[b] + g[b] * g[a];
      const long target = a != b ? 0 : (static_cast<int>(a) < k ? 2 : -2);
      if (!(ac == Scalar(target) * Matrix::identity(d))) return false;
    }
  return true;
}

Outcome paper8() {
  Outcome o;
  const auto rep = spinor::paper8_preset();
  o.require(rep.gammas.size() == 8 && relations(rep.gammas, 7), "Clifford relations");
  const Matrix c = spinor::paper8_charge_conjugation();
  const Matrix sx = spinor::pauli_x(), sy = spinor::pauli_y(), sz = spinor::pauli_z();
  o.require(c == kron(kron(kron(sx, sz), sy), sz), "C is not sx⊗sz⊗sy⊗sz");
  for (const auto& g : rep.gammas) o.require(c * g == g.conj() * c, "C gamma != conj(gamma) C");
  const int q = (1 - 7) * (1 - 7 + 2) / 8;
  o.require(q == 3, "exponent");
  o.require((c.conj() * c).is_scalar_multiple_of_identity(Scalar(-1)), "conj(C)C != -id");
  o.require(spinor::cc_sign(rep.sig) == -1, "cc_sign");
  return o;
}

std::vector<std::pair<int, int>> sweep() {
  std::vector<std::pair<int, int>> s;
  for (int m = 2; m <= 8; m += 2)
    for (int k = 0; k <= m; ++k) s.push_back({k, m - k});
  return s;
}

Outcome intertwiners() {
  Outcome o;
  int n = 0;
  for (auto [k, l] : sweep()) {
    const auto rep = spinor::build_gamma(k, l);
    const auto pair = spinor::solve_intertwiners(rep);
    const std::string sig = "(" + std::to_string(k) + "," + std::to_string(l) + ") ";
    o.require(pair.normalized, sig + "pair not normalized");
    for (const auto& c : spinor::prop1_audit(rep, pair).checks) o.require(c.pass, sig + c.id);
    // direct re-checks of the defining relations and the squares
    for (const auto& g : rep.gammas) {
      o.require(pair.b * g == g.transpose() * pair.b, sig + "B gamma != gamma^T B");
      o.require(pair.c * g == g.conj() * pair.c, sig + "C gamma != conj(gamma) C");
    }
    const int cc = (l - k) * (l - k + 2) / 8 % 2 ? -1 : 1;
    o.require((pair.c.conj() * pair.c).is_scalar_multiple_of_identity(Scalar(cc)), sig + "conj(C)C");
    ++n;
  }
  o.note = o.pass ? std::to_string(n) + " signatures" : o.note;
  return o;
}

Outcome chirality_rule() {
  Outcome o;
  for (auto [k, l] : sweep()) {
    const auto rep = spinor::build_gamma(k, l);
    const auto pair = spinor::solve_intertwiners(rep);
    const auto w = spinor::weyl_split(rep);
    const bool keeps = eta_squared_direct(k, l) == 1;
    for (int side = 0; side < 2; ++side)
      for (const auto& phi : side == 0 ? w.plus : w.minus) {
        const Vector pc = spinor::charge_conjugate(phi, pair.c);
        // γ_{2n+1} φ_c = ±ι φ_c
        const Scalar want = ((side == 0) == keeps ? Scalar(1) : Scalar(-1)) * rep.iota;
        o.require(rep.chirality * pc == want * pc,
                  "(" + std::to_string(k) + "," + std::to_string(l) + ") chirality of phi_c");
      }
  }
  return o;
}

Outcome majorana() {
  Outcome o;
  for (auto [k, l] : sweep()) {
    const auto rep = spinor::build_gamma(k, l);
    const auto pair = spinor::solve_intertwiners(rep);
    const int sign = (l - k) * (l - k + 2) / 8 % 2 ? -1 : 1;
    const auto basis = spinor::majorana_basis(rep, pair.c);
    o.require(basis.has_value() == (sign == 1), "(" + std::to_string(k) + "," + std::to_string(l) + ") Majorana existence");
    if (basis)
      for (const auto& v : *basis) o.require(spinor::charge_conjugate(v, pair.c) == v, "basis vector not Majorana");
  }
  for (int p = 0; p <= 1; ++p) {
    const auto rep = spinor::build_gamma(3 + p, 1 + p);
    const auto pair = spinor::solve_intertwiners(rep);
    const auto ms = spinor::majorana_complex_structure(rep, pair.c);
    o.require((ms.j * ms.j).is_scalar_multiple_of_identity(Scalar(-1)), "J^2 != -id");
    for (std::size_t i = 0; i < ms.j.rows(); ++i)
      for (std::size_t jj = 0; jj < ms.j.cols(); ++jj) o.require(ms.j(i, jj).is_real(), "J not real");
    o.require(ms.matches_weyl, "W+- differ from Weyl spaces");
    // W± really are Weyl spinors of the matching chirality
    for (const auto& v : ms.w_plus) o.require(rep.chirality * v == rep.iota * v, "W+ chirality");
    for (const auto& v : ms.w_minus) o.require(rep.chirality * v == Scalar(-1) * rep.iota * v, "W- chirality");
  }
  return o;
}

Outcome dirac_current() {
  Outcome o;
  Rng rng(20240601);
  double worst = 0;
  for (auto [k, l] : std::vector<std::pair<int, int>>{{3, 1}, {7, 1}}) {
    const auto rep = spinor::build_gamma(k, l);
    const auto pair = spinor::solve_intertwiners(rep);
    const std::string sig = "(" + std::to_string(k) + "," + std::to_string(l) + ") ";
    for (int t = 0; t < 100; ++t) {
      dirac::RVector a;
      if (t == 0 || t % 10 == 7) {
        a.assign(static_cast<std::size_t>(k + l), Rational(0));
        a[0] = make_rational(1, 3);
        a[static_cast<std::size_t>(k + l - 1)] = make_rational(-1, 2);
      }
      const auto psi = dirac::random_superposition(rep, 3, Rational(1), make_rational(1, 2), a, rng);
      const auto j = dirac::current(rep, pair, psi);
      o.require(j.is_real(), sig + "Im j != 0");
      o.require(dirac::current(rep, pair, dirac::charge_conjugate(psi, pair.c)).terms == j.terms, sig + "j(psi_c) != j(psi)");
      o.require(j.divergence().empty(), sig + "exact divergence nonzero");
      o.require(dirac::conjugate_equation_check(rep, pair, psi), sig + "psi_c fails the conjugate equation");
      if (t % 10 == 0) {
        const auto nd = dirac::numeric_divergence(rep, pair, psi, 5, rng);
        worst = std::max(worst, nd.max_relative);
      }
    }
  }
  o.require(worst <= 1e-8, "numeric divergence " + std::to_string(worst));
  if (o.pass) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "numeric divergence max %.2e", worst);
    o.note = buf;
  }
  return o;
}

Outcome fourier64() {
  Outcome o;
  const int n = 64;
  const Matrix d = fourier::derivative_matrix(n), x = fourier::sqrt_matrix(n), j = fourier::complex_structure(n);
  o.require((j * j).is_scalar_multiple_of_identity(Scalar(-1)), "J^2 != -id");
  o.require(x * x == Scalar(-1) * (d * d), "X^2 != -D^2");
  o.require(x * d == d * x, "[X,D] != 0");
  const auto w = fourier::w_pm_action(n);
  o.require(w.dim_plus == 64 && w.dim_minus == 64, "W+- dimensions");
  o.require(w.ok(), "X != -+ iD on W+-");
  // on the explicit vectors cos + i sin (and its conjugate)
  for (int k = 1; k <= n; ++k) {
    Vector v(2 * n);
    v[fourier::cos_index(k)] = 1;
    v[fourier::sin_index(k)] = Scalar::i();
    const Vector jv = j * v;
    const bool in_plus = jv == Scalar::i() * v;
    const bool in_minus = jv == Scalar(-1) * Scalar::i() * v;
    o.require(in_plus || in_minus, "cos + i sin is not a J eigenvector");
    const Scalar s = in_plus ? Scalar(-1) * Scalar::i() : Scalar::i();
    o.require(x * v == s * (d * v), "X v != -+ i D v");
  }
  o.require(fourier::audit(n).all_pass(), "fourier audit");
  return o;
}

Outcome hodge() {
  Outcome o;
  const std::vector<std::pair<int, int>> cases{{0, 2}, {3, 1}, {1, 3}, {0, 6}, {0, 1}, {2, 3}};
  for (auto [k, l] : cases) {
    const clifford::Signature sig(k, l);
    const int m = k + l;
    std::vector<clifford::Blade> basis = clifford::blades_of_grade(m, m / 2);
    if (m % 2) {
      auto upper = clifford::blades_of_grade(m, m / 2 + 1);
      basis.insert(basis.end(), upper.begin(), upper.end());
    }
    const Matrix star = clifford::hodge_matrix(sig, basis);
    o.require((star * star).is_scalar_multiple_of_identity(Scalar(-1)),
              "(" + std::to_string(k) + "," + std::to_string(l) + ") star^2 != -id");
    o.require(clifford::duality_complex_structure(sig).has_value(), "duality structure missing");
  }
  for (int m = 0; m <= 8; ++m)
    for (int k = 0; k <= m; ++k) {
      const int l = m - k;
      const clifford::Signature sig(k, l);
      const auto eta = clifford::volume_element(sig);
      const auto sq = eta * eta;
      const int direct = eta_squared_direct(k, l);
      o.require(sq == clifford::Multivector::scalar(sig, Scalar(direct)), "eta*eta");
      o.require(clifford::eta_squared(sig) == direct, "eta^2 formula");
    }
  return o;
}

Outcome cr_optical() {
  Outcome o;
  using namespace optical;
  auto C = [](const std::string& s) { return xcalc::parse_poly(s, cr_coordinates()); };
  const CRData heis{C("-i*(x + i*y)")};
  const CRData flat{Poly(cr_coordinates(), Scalar(0))};
  const auto fh = cr_frame(heis);
  o.require(check_frame(fh).ok(), "Heisenberg frame");
  const Poly z = C("x + i*y"), w = C("u - i*(x^2 + y^2)");
  o.require(cr_function_check(heis, z).is_zero(), "z is not CR");
  o.require(cr_function_check(heis, w).is_zero(), "w is not CR");
  const auto sec = canonical_section(heis, z, w, Poly({"a", "b"}, Scalar(1)));
  o.require(sec.closed && sec.annihilated && sec.nonzero, "F' = dz^dw");
  o.require(sec.f_prime == xcalc::wedge(xcalc::PolyForm::exact(z), xcalc::PolyForm::exact(w)), "F' != dz^dw");
  o.require(levi_form(cr_frame(flat)).is_zero(), "L = 0 not Levi-flat");
  o.require(!levi_form(fh).is_zero(), "L = -iz Levi-flat");

  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    const CRData data{random_poly(cr_coordinates(), 3, rng)};
    const auto chart = rt_metric(data, Poly(chart_coordinates(), Scalar(1)), xcalc::PolyForm::dx(chart_coordinates(), "r"));
    const auto n = null_plane_from_chart(chart);
    o.require(chart.metric(chart.k, chart.k).is_zero(), "k not null");
    o.require(total_nullity(n, chart.metric), "N not totally null");
    o.require(intersection_is_k(n, chart.k), "N cap Nbar != K");
    o.require(integrability_check(n), "N not integrable");
    const auto sig = signature_sample(chart, 10, rng, 1e-9);
    o.require(sig.ok() && sig.points == 10, "signature (3,1) failed, L = " + data.l.str());
  }
  if (o.pass) o.note = "20 random charts";
  return o;
}

Outcome selfdual() {
  Outcome o;
  using namespace optical;
  for (auto [k, l] : std::vector<std::pair<int, int>>{{4, 0}, {3, 1}, {2, 2}}) {
    const auto rep = spinor::build_gamma(k, l);
    const auto pair = spinor::solve_intertwiners(rep);
    const auto flat = flat_chart(rep.sig);
    const auto w = spinor::weyl_split(rep);
    const std::string sig = "(" + std::to_string(k) + "," + std::to_string(l) + ") ";
    for (int side = 0; side < 2; ++side)
      for (const auto& phi : side == 0 ? w.plus : w.minus) {
        const auto plane = null_plane_from_spinor(rep, pair, phi);
        const auto dual = null_2form(plane.plane, flat.metric, flat.frame);
        o.require(dual.f_nonzero, sig + "F = 0");
        o.require(dual.sign == (side == 0 ? 1 : -1), sig + "duality sign does not match chirality");
        if (l == 1) o.require(dual.f_wedge_fbar_zero, sig + "F^Fbar != 0");
        if (l == 0) o.require(!dual.f_wedge_fbar_zero, sig + "F^Fbar == 0");
      }
  }
  return o;
}

Outcome conjecture() {
  Outcome o;
  using namespace optical;
  auto R = [](const std::string& s) { return xcalc::parse_poly(s, r3_coordinates()); };
  const PolyVField f(r3_coordinates(), {R("i"), R("-1"), R("0")});
  const auto r = conjecture_verify(f, R("x + i*y"), R("u"));
  o.require(r.div_free, "div F != 0");
  o.require(r.nondegenerate, "F x Fbar = 0");
  o.require(r.verified(), "flat triple rejected");
  const PolyVField bad(r3_coordinates(), {R("1"), R("0"), R("0")});
  o.require(!conjecture_verify(bad, R("x + i*y"), R("u")).verified(), "mismatched F accepted");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"clock_oracle_equivalence", clock_oracle},
      {"paper8_preset", paper8},
      {"intertwiner_sweep", intertwiners},
      {"charge_conjugation_chirality", chirality_rule},
      {"majorana_criterion", majorana},
      {"dirac_current", dirac_current},
      {"fourier_complex_structure", fourier64},
      {"hodge_duality", hodge},
      {"cr_optical", cr_optical},
      {"selfdual_chirality", selfdual},
      {"conjecture_verifier", conjecture},
  };
  int failed = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2d %-30s %6.2fs  %s\n", o.pass ? "PASS" : "FAIL", index, name.c_str(), secs, o.note.c_str());
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}

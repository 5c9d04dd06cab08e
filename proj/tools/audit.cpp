#include "audit.hpp"

#include <iomanip>
#include <sstream>

#include "cxs/clifford.hpp"
#include "cxs/clock.hpp"
#include "cxs/dirac.hpp"
#include "cxs/fourier.hpp"
#include "cxs/optical.hpp"
#include "cxs/spinor.hpp"
#include "cxs/xcalc_json.hpp"

namespace cxs::audit {

namespace {

std::string sig_name(int k, int l) { return "(" + std::to_string(k) + "," + std::to_string(l) + ")"; }

std::string sci(double x) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << x;
  return os.str();
}

Rational real_from_json(const json& j) {
  Scalar s = xcalc::scalar_from_json(j);
  if (!s.is_real()) throw std::invalid_argument("expected a real rational");
  return s.re();
}

dirac::RVector rvector_from_json(const json& j) {
  dirac::RVector v;
  for (const auto& x : j) v.push_back(real_from_json(x));
  return v;
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

void AuditReport::add(const std::string& id, bool pass, const std::string& witness) {
  if (pass) checks.push_back({id, Status::Pass, ""});
  else checks.push_back({id, Status::Fail, witness.empty() ? "check failed" : witness});
}

void AuditReport::measure(const std::string& id, bool pass, const std::string& value) {
  add(id, pass, value);
  if (pass) checks.back().witness = value;
}

void AuditReport::skip(const std::string& id, const std::string& why) { checks.push_back({id, Status::Skipped, why}); }

bool AuditReport::all_pass() const {
  for (const auto& c : checks)
    if (c.status == Status::Fail) return false;
  for (const auto& s : children)
    if (!s.all_pass()) return false;
  return true;
}

std::size_t AuditReport::count(Status s) const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.status == s;
  for (const auto& ch : children) n += ch.count(s);
  return n;
}

json AuditReport::to_json() const {
  json checks_json = json::array();
  for (const auto& c : checks) {
    json e = {{"id", c.id}, {"status", audit::to_string(c.status)}};
    if (!c.witness.empty()) e["witness"] = c.witness;
    checks_json.push_back(e);
  }
  json out = {{"schema", 1}, {"suite", suite}, {"pass", all_pass()}, {"checks", checks_json}};
  if (!children.empty()) {
    json subs = json::array();
    for (const auto& c : children) subs.push_back(c.to_json());
    out["suites"] = subs;
  }
  return out;
}

std::string AuditReport::text() const {
  std::ostringstream os;
  auto emit = [&](auto&& self, const AuditReport& r, const std::string& prefix) -> void {
    const std::string name = prefix.empty() ? r.suite : prefix + "/" + r.suite;
    for (const auto& c : r.checks) {
      os << "[" << audit::to_string(c.status) << "] " << name << ": " << c.id;
      if (!c.witness.empty()) os << " -- " << c.witness;
      os << "\n";
    }
    for (const auto& ch : r.children) self(self, ch, name);
  };
  emit(emit, *this, "");
  os << suite << ": " << count(Status::Pass) << " passed, " << count(Status::Fail) << " failed, "
     << count(Status::Skipped) << " skipped\n";
  return os.str();
}

// --- clock --------------------------------------------------------------------

AuditReport clock_suite() {
  AuditReport r{"clock"};
  using clock::Base;
  using clock::classify;
  using clock::MatrixAlgebraType;
  r.add("Cl(3,1)=R(4)", classify(3, 1) == MatrixAlgebraType{Base::R, 4}, classify(3, 1).str());
  r.add("Cl(4,2)=R(8)", classify(4, 2) == MatrixAlgebraType{Base::R, 8}, classify(4, 2).str());
  r.add("Cl(7,1)=H(8)", classify(7, 1) == MatrixAlgebraType{Base::H, 8}, classify(7, 1).str());
  r.add("same_type (7,1) ~ (1,3)", clock::same_type(7, 1, 1, 3));

  bool dims = true, periodic = true, shift = true, even = true;
  std::string witness;
  for (int m = 0; m <= 8; ++m)
    for (int k = 0; k <= m; ++k) {
      const int l = m - k;
      if (classify(k, l).real_dimension() != (std::uint64_t{1} << m)) {
        dims = false;
        witness = sig_name(k, l);
      }
      // Cl(k+1,l+1) = Cl(k,l) ⊗ R(2), Cl(k+4,l) ~ Cl(k,l+4).
      auto a = classify(k, l), b = classify(k + 1, l + 1);
      if (!(b.base == a.base && b.size == 2 * a.size)) periodic = false;
      auto c = classify(k + 4, l), e = classify(k, l + 4);
      if (!(c == e)) shift = false;
      if (m >= 1 && clock::even_subalgebra(k, l).real_dimension() * 2 != (std::uint64_t{1} << m)) even = false;
    }
  r.add("real dimension 2^(k+l), k+l<=8", dims, witness);
  r.add("Cl(k+1,l+1) = Cl(k,l) x R(2)", periodic);
  r.add("Cl(k+4,l) = Cl(k,l+4)", shift);
  r.add("even part has half the dimension", even);
  return r;
}

// --- spinors ------------------------------------------------------------------

AuditReport rep_suite(int k, int l, bool paper8) {
  AuditReport r{"rep" + sig_name(k, l) + (paper8 ? "[paper8]" : "")};
  if (paper8 && !(k == 7 && l == 1)) throw std::invalid_argument("preset paper8 is the (7,1) representation");
  const spinor::GammaRep rep = paper8 ? spinor::paper8_preset() : spinor::build_gamma(k, l);
  r.add("clifford_relations", spinor::check_clifford_relations(rep.gammas, rep.sig));

  if (paper8) {
    const Matrix c = spinor::paper8_charge_conjugation();
    bool def_c = true;
    for (const auto& g : rep.gammas) def_c = def_c && c * g == g.conj() * c;
    r.add("preset_C_intertwines", def_c, "C gamma != conj(gamma) C");
    const int s = spinor::cc_sign(rep.sig);
    r.add("preset_CC_sign", (c.conj() * c).is_scalar_multiple_of_identity(Scalar(s)),
          "conj(C)C = " + std::to_string(s) + " id expected");
  }

  const spinor::Intertwiner pair = spinor::solve_intertwiners(rep);
  for (const auto& c : spinor::prop1_audit(rep, pair).checks) r.add(c.id, c.pass, c.detail);

  // Conjugation keeps chirality iff η² = 1.
  const bool keeps = clifford::eta_squared(rep.sig) == 1;
  const spinor::WeylSplit w = spinor::weyl_split(rep);
  bool rule = true;
  for (int side = 0; side < 2; ++side)
    for (const auto& phi : side == 0 ? w.plus : w.minus) {
      auto expected = (side == 0) == keeps ? spinor::Chirality::Plus : spinor::Chirality::Minus;
      rule = rule && spinor::chirality_of(rep, spinor::charge_conjugate(phi, pair.c)) == expected;
    }
  r.add("charge_conjugation_chirality", rule,
        keeps ? "conjugation should preserve chirality" : "conjugation should flip chirality");

  const bool majorana = spinor::majorana_basis(rep, pair.c).has_value();
  r.add("majorana_iff_CC_plus", majorana == (spinor::cc_sign(rep.sig) == 1),
        majorana ? "Majorana basis found" : "no Majorana basis");
  if (k - l == 2 && l >= 1) {
    const auto ms = spinor::majorana_complex_structure(rep, pair.c);
    r.add("J_squared_minus_id", (ms.j * ms.j).is_scalar_multiple_of_identity(Scalar(-1)));
    r.add("J_eigenspaces_are_weyl", ms.matches_weyl);
  }
  return r;
}

AuditReport spinor_sweep_suite() {
  AuditReport r{"spinor_sweep"};
  for (int m = 2; m <= spinor::kMaxRepDimension; m += 2)
    for (int k = 0; k <= m; ++k) r.merge(rep_suite(k, m - k, false));
  r.merge(rep_suite(7, 1, true));
  return r;
}

AuditReport hodge_suite() {
  AuditReport r{"hodge"};
  const std::vector<std::pair<int, int>> cases{{0, 2}, {3, 1}, {1, 3}, {0, 6}, {0, 1}, {2, 3}};
  for (auto [k, l] : cases) {
    const auto ds = clifford::duality_complex_structure(clifford::Signature(k, l));
    const bool ok = ds && (ds->j * ds->j).is_scalar_multiple_of_identity(Scalar(-1));
    r.add("star_squared_minus_id" + sig_name(k, l), ok, ds ? "star^2 != -id" : "eta^2 = +1");
  }
  bool formula = true;
  std::string witness;
  for (int m = 0; m <= 8; ++m)
    for (int k = 0; k <= m; ++k) {
      const clifford::Signature sig(k, m - k);
      const auto eta = clifford::volume_element(sig);
      if (!(eta * eta == clifford::Multivector::scalar(sig, Scalar(clifford::eta_squared(sig))))) {
        formula = false;
        witness = sig_name(k, m - k);
      }
    }
  r.add("eta_squared_formula", formula, witness);
  return r;
}

// --- dirac --------------------------------------------------------------------

AuditReport dirac_suite(int k, int l, std::uint64_t seed, std::size_t samples) {
  AuditReport r{"dirac" + sig_name(k, l)};
  const spinor::GammaRep rep = spinor::build_gamma(k, l);
  dirac::require_lorentzian(rep);
  const spinor::Intertwiner pair = spinor::solve_intertwiners(rep);
  Rng rng(seed);

  // Rest frame kernel has half the spinor dimension.
  dirac::RVector rest(static_cast<std::size_t>(k + l), Rational(0));
  rest.back() = 1;
  const auto kernel = dirac::solve_amplitudes(rep, rest, Rational(1));
  r.measure("rest_frame_kernel", kernel.size() * 2 == rep.spinor_dim(), "dim " + std::to_string(kernel.size()));

  bool real = true, invariant = true;
  for (std::size_t t = 0; t < samples; ++t) {
    const Vector psi = random_vector(rng, rep.spinor_dim());
    const Vector j = dirac::current_at(rep, pair, psi);
    for (const auto& c : j) real = real && c.is_real();
    invariant = invariant && dirac::current_at(rep, pair, spinor::charge_conjugate(psi, pair.c)) == j;
  }
  r.add("current_real", real, "imaginary part found");
  r.add("current_conjugation_invariant", invariant, "j(psi_c) != j(psi)");

  bool exact_real = true, exact_inv = true, conserved = true, numeric = true, conj_eq = true;
  double worst = 0;
  dirac::RVector a(static_cast<std::size_t>(k + l), Rational(0));
  a[0] = make_rational(1, 2);
  for (std::size_t t = 0; t < samples; ++t) {
    const std::size_t waves = 2 + t % 2;
    const bool with_potential = t % 5 == 4;
    const auto psi = dirac::random_superposition(rep, waves, Rational(1), Rational(1),
                                                 with_potential ? a : dirac::RVector{}, rng);
    const auto j = dirac::current(rep, pair, psi);
    exact_real = exact_real && j.is_real();
    exact_inv = exact_inv && dirac::current(rep, pair, dirac::charge_conjugate(psi, pair.c)).terms == j.terms;
    conserved = conserved && j.divergence().empty();
    conj_eq = conj_eq && dirac::conjugate_equation_check(rep, pair, psi);
    const auto nd = dirac::numeric_divergence(rep, pair, psi, 20, rng);
    worst = std::max(worst, nd.max_relative);
    numeric = numeric && nd.max_relative <= 1e-8;
  }
  r.add("superposition_current_real", exact_real);
  r.add("superposition_conjugation_invariant", exact_inv);
  r.add("divergence_exact_zero", conserved);
  r.measure("divergence_numeric", numeric, "max relative " + sci(worst));
  r.add("conjugate_equation", conj_eq);

  // Negative control: an off-shell summand breaks conservation.
  auto broken = dirac::random_superposition(rep, 2, Rational(1), Rational(1), {}, rng);
  broken.waves[1].p.back() += 1;
  broken.waves[1].amplitude = random_vector(rng, rep.spinor_dim());
  r.add("off_shell_control_detected", !dirac::current(rep, pair, broken).divergence().empty(),
        "off-shell superposition still conserved");
  return r;
}

AuditReport dirac_waves_suite(int k, int l, const json& input) {
  AuditReport r{"dirac-waves" + sig_name(k, l)};
  const spinor::GammaRep rep = spinor::build_gamma(k, l);
  dirac::require_lorentzian(rep);
  const spinor::Intertwiner pair = spinor::solve_intertwiners(rep);
  dirac::WaveFunction psi;
  bool on_shell = true;
  const json& list = input.is_array() ? input : input.at("waves");
  for (const auto& w : list) {
    dirac::PlaneWave pw;
    pw.p = rvector_from_json(w.at("p"));
    pw.m = real_from_json(w.value("m", json(1)));
    pw.e = real_from_json(w.value("e", json(0)));
    if (w.contains("A")) pw.a = rvector_from_json(w.at("A"));
    const auto kernel = dirac::solve_amplitudes(rep, pw.p, pw.m, pw.e, pw.a);
    Rng rng(w.value("amplitude_seed", std::uint64_t{0}));
    if (kernel.empty()) {
      on_shell = false;
      pw.amplitude = random_vector(rng, rep.spinor_dim());
    } else {
      pw.amplitude.assign(rep.spinor_dim(), Scalar(0));
      while (is_zero(pw.amplitude))
        for (const auto& v : kernel) pw.amplitude = pw.amplitude + random_scalar(rng, 2, 2) * v;
    }
    psi.waves.push_back(std::move(pw));
  }
  if (psi.waves.empty()) throw std::invalid_argument("waves file lists no plane waves");
  r.add("summands_on_shell", on_shell, "a momentum is off-shell; its amplitude was drawn at random");
  const auto j = dirac::current(rep, pair, psi);
  r.add("current_real", j.is_real());
  r.add("current_conjugation_invariant",
        dirac::current(rep, pair, dirac::charge_conjugate(psi, pair.c)).terms == j.terms);
  const auto div = j.divergence();
  r.add("divergence_exact_zero", div.empty(), std::to_string(div.size()) + " nonzero frequencies");
  Rng rng(0);
  const auto nd = dirac::numeric_divergence(rep, pair, psi, 20, rng);
  r.measure("divergence_numeric", nd.max_relative <= 1e-8, "max relative " + sci(nd.max_relative));
  if (on_shell) r.add("conjugate_equation", dirac::conjugate_equation_check(rep, pair, psi));
  else r.skip("conjugate_equation", "needs on-shell summands");
  return r;
}

// --- fourier ------------------------------------------------------------------

AuditReport fourier_suite(int n) {
  AuditReport r{"fourier-j(N=" + std::to_string(n) + ")"};
  const auto a = fourier::audit(n);
  r.add("D_antisymmetric", a.d_antisymmetric);
  r.add("D_squared_is_minus_k_squared", a.d_squared_diagonal);
  r.add("X_squared_is_minus_D_squared", a.x_squared);
  r.add("X_commutes_with_D", a.x_commutes);
  r.add("J_squared_minus_id", a.j_squared);
  r.add("J_orthogonal", a.j_orthogonal);
  r.add("J_commutes_with_D_and_X", a.j_commutes);
  r.add("X_is_minus_iD_on_W_plus", a.wpm.plus_ok, "dim W+ = " + std::to_string(a.wpm.dim_plus));
  r.add("X_is_plus_iD_on_W_minus", a.wpm.minus_ok, "dim W- = " + std::to_string(a.wpm.dim_minus));
  return r;
}

// --- CR / optical -------------------------------------------------------------

json heisenberg_cr_data() {
  return {{"L", "-i*(x + i*y)"},
          {"levi_flat", false},
          {"cr_functions", {"x + i*y", "u - i*(x^2 + y^2)"}},
          {"section", "a^2"},
          {"frame_change", {{"a", "2"}, {"b", "i"}, {"c", "x + i*y"}}}};
}

AuditReport cr_suite(const json& data) {
  AuditReport r{"cr"};
  const auto& coords = optical::cr_coordinates();
  const optical::CRData cr{xcalc::poly_from_json(data.at("L"), coords)};
  const auto frame = optical::cr_frame(cr);
  const auto fc = optical::check_frame(frame);
  r.add("Z_contract_lambda_zero", fc.z_lambda);
  r.add("Z_contract_mu_zero", fc.z_mu);
  r.add("Z_contract_mubar_one", fc.z_mubar);
  r.add("lambda_mu_mubar_nonzero", fc.volume);
  r.add("lambda_real", fc.lambda_real);
  const auto levi = optical::levi_form(frame);
  if (data.contains("levi_flat")) {
    const bool flat = data.at("levi_flat").get<bool>();
    r.add(flat ? "levi_flat" : "levi_nondegenerate", levi.is_zero() == flat, "lambda^dlambda = " + levi.str());
  }

  if (data.contains("cr_functions")) {
    const auto& fns = data.at("cr_functions");
    std::vector<xcalc::Poly> polys;
    for (std::size_t i = 0; i < fns.size(); ++i) {
      polys.push_back(xcalc::poly_from_json(fns[i], coords));
      const auto res = optical::cr_function_check(cr, polys.back());
      r.add("cr_function[" + std::to_string(i) + "]", res.is_zero(), "Zf = " + res.str());
    }
    if (polys.size() == 2 && data.contains("section")) {
      const auto f = xcalc::poly_from_json(data.at("section"), {"a", "b"});
      try {
        const auto sec = optical::canonical_section(cr, polys[0], polys[1], f);
        r.add("section_closed", sec.closed, "dF' = " + xcalc::d(sec.f_prime).str());
        r.add("section_Z_annihilated", sec.annihilated);
        r.add("section_nonzero", sec.nonzero);
      } catch (const std::invalid_argument& e) {
        r.add("section_inputs", false, e.what());
      }
    }
  }
  if (data.contains("frame_change")) {
    const auto& fcj = data.at("frame_change");
    const auto ch = optical::frame_change(frame, xcalc::poly_from_json(fcj.at("a"), coords),
                                          xcalc::poly_from_json(fcj.at("b"), coords),
                                          xcalc::poly_from_json(fcj.at("c"), coords));
    r.add("frame_change_invariants", ch.check.ok());
    r.add("frame_change_direction", ch.direction_invariant, "lambda'^mu' != ab lambda^mu");
  }
  return r;
}

namespace {

void rt_checks(AuditReport& r, const optical::OpticalChart& chart, std::size_t points, Rng& rng,
               const std::string& prefix) {
  const auto rep = optical::rt_audit(chart, points, rng);
  r.add(prefix + "metric_symmetric", rep.symmetric);
  r.add(prefix + "k_null", rep.k_null);
  r.add(prefix + "lambda_wedge_gk_zero", rep.lambda_wedge_gk);
  r.measure(prefix + "signature_3_1", rep.signature.ok(),
        std::to_string(rep.signature.lorentzian) + "/" + std::to_string(rep.signature.points) +
            " Lorentzian, min |eigenvalue| " + sci(rep.signature.min_abs_eigenvalue));
  const auto n = optical::null_plane_from_chart(chart);
  r.add(prefix + "totally_null", optical::total_nullity(n, chart.metric));
  r.add(prefix + "N_cap_Nbar_is_K", optical::intersection_is_k(n, chart.k));
  r.add(prefix + "integrable", optical::integrability_check(n));

  // Pointwise duality of F at a point where the coframe is invertible.
  for (int tries = 0; tries < 50; ++tries) {
    Vector pt(4);
    for (auto& x : pt) x = Scalar(random_rational(rng, 3, 4));
    try {
      const auto frame = optical::rt_point_frame(chart, pt);
      const auto dual = optical::null_2form(n, chart.metric, frame);
      r.add(prefix + "F_self_dual", dual.sign != 0, "star F != +-iota F");
      r.add(prefix + "F_wedge_Fbar_zero", dual.f_wedge_fbar_zero);
      return;
    } catch (const std::domain_error&) {
    }
  }
  r.add(prefix + "F_self_dual", false, "no nondegenerate sample point found");
}

}  // namespace

AuditReport rt_suite(const json& input, std::uint64_t seed) {
  AuditReport r{"rt"};
  const auto& chart_coords = optical::chart_coordinates();
  const optical::CRData cr{xcalc::poly_from_json(input.at("L"), optical::cr_coordinates())};
  const xcalc::Poly p = xcalc::poly_from_json(input.value("P", json("1")), chart_coords);
  xcalc::PolyForm xi;
  const json xij = input.value("xi", json::array({"0", "0", "0", "1"}));
  if (xij.is_array()) {
    xi = xcalc::PolyForm(chart_coords, 1);
    if (xij.size() != 4) throw std::invalid_argument("xi needs four components on (u,x,y,r)");
    for (std::size_t i = 0; i < 4; ++i) xi.add_term(clifford::Blade{1} << i, xcalc::poly_from_json(xij[i], chart_coords));
  } else {
    xi = xcalc::form_from_json(xij, chart_coords);
  }
  Rng rng(seed);
  try {
    const auto chart = optical::rt_metric(cr, p, xi);
    rt_checks(r, chart, input.value("points", std::size_t{10}), rng, "");
  } catch (const std::invalid_argument& e) {
    r.add("nondegenerate", false, e.what());
  }
  return r;
}

AuditReport rt_random_suite(std::uint64_t seed, std::size_t charts) {
  AuditReport r{"rt-random"};
  Rng rng(seed);
  const auto& chart_coords = optical::chart_coordinates();
  for (std::size_t t = 0; t < charts; ++t) {
    const optical::CRData cr{optical::random_poly(optical::cr_coordinates(), 3, rng)};
    const auto frame = optical::cr_frame(cr);
    const std::string prefix = "L" + std::to_string(t) + ":";
    r.add(prefix + "cr_frame", optical::check_frame(frame).ok(), "L = " + cr.l.str());
    const auto chart =
        optical::rt_metric(cr, xcalc::Poly(chart_coords, Scalar(1)), xcalc::PolyForm::dx(chart_coords, "r"));
    rt_checks(r, chart, 10, rng, prefix);
  }
  return r;
}

AuditReport selfdual_suite(std::uint64_t seed) {
  AuditReport r{"self-duality"};
  Rng rng(seed);
  for (auto [k, l] : std::vector<std::pair<int, int>>{{4, 0}, {3, 1}, {2, 2}}) {
    const auto rep = spinor::build_gamma(k, l);
    const auto pair = spinor::solve_intertwiners(rep);
    const auto w = spinor::weyl_split(rep);
    const auto flat = optical::flat_chart(rep.sig);
    for (int side = 0; side < 2; ++side) {
      const auto& basis = side == 0 ? w.plus : w.minus;
      Vector phi(rep.spinor_dim());
      while (is_zero(phi))
        for (const auto& b : basis) phi = phi + random_scalar(rng) * b;
      const auto plane = optical::null_plane_from_spinor(rep, pair, phi);
      const auto dual = optical::null_2form(plane.plane, flat.metric, flat.frame);
      const int expected = side == 0 ? 1 : -1;
      const std::string id = sig_name(k, l) + (side == 0 ? "+" : "-");
      r.add(id + " chirality_matches_duality", dual.sign == expected,
            "star F = " + std::to_string(dual.sign) + " iota F");
      if (l == 1) {
        r.add(id + " F_wedge_Fbar_zero", dual.f_wedge_fbar_zero);
        r.add(id + " real_null_direction", plane.contains_real_null);
      } else if (l == 0) {
        r.add(id + " F_wedge_Fbar_nonzero", !dual.f_wedge_fbar_zero);
        r.add(id + " N_cap_Nbar_zero", plane.transverse);
      } else {
        // Neutral: either N ∩ N̄ = 0 or N = N̄, decided by <Bφ_c, φ>.
        const bool ok = plane.pairing.is_zero() ? plane.real_plane && dual.f_wedge_fbar_zero
                                                 : plane.transverse && !dual.f_wedge_fbar_zero;
        r.add(id + " neutral_dichotomy", ok, "pairing " + plane.pairing.str());
      }
    }
  }
  return r;
}

json flat_triple() { return {{"F", {"i", "-1", "0"}}, {"z", "x + i*y"}, {"w", "u"}}; }
json mismatched_triple() { return {{"F", {"1", "0", "0"}}, {"z", "x + i*y"}, {"w", "u"}}; }

AuditReport conjecture_suite(const json& triple) {
  AuditReport r{"conjecture"};
  const auto& coords = optical::r3_coordinates();
  const auto f = xcalc::vfield_from_json(triple.at("F"), coords);
  const auto z = xcalc::poly_from_json(triple.at("z"), coords);
  const auto w = xcalc::poly_from_json(triple.at("w"), coords);
  const auto rep = optical::conjecture_verify(f, z, w);
  r.add("div_F_zero", rep.div_free, "div F = " + optical::divergence(f).str());
  r.add("F_cross_Fbar_nonzero", rep.nondegenerate);
  r.add("F_equals_grad_z_cross_grad_w", rep.matches, "grad z x grad w = " + rep.cross.str());
  return r;
}

AuditReport full_audit(std::uint64_t seed) {
  AuditReport r{"full-audit"};
  r.merge(clock_suite());
  r.merge(spinor_sweep_suite());
  r.merge(hodge_suite());
  r.merge(dirac_suite(3, 1, seed, 100));
  r.merge(dirac_suite(7, 1, seed + 1, 100));
  r.merge(fourier_suite(64));
  r.merge(cr_suite(heisenberg_cr_data()));
  AuditReport flat = cr_suite({{"L", "0"}, {"levi_flat", true}, {"cr_functions", {"x + i*y", "u"}}, {"section", "1"}});
  flat.suite = "cr-flat";
  r.merge(flat);
  r.merge(rt_random_suite(seed, 20));
  r.merge(selfdual_suite(seed));
  r.merge(conjecture_suite(flat_triple()));
  AuditReport control{"conjecture-control"};
  const auto mismatch = conjecture_suite(mismatched_triple());
  control.add("mismatched_F_rejected", !mismatch.all_pass(), "mismatched triple verified");
  r.merge(control);
  return r;
}

}  // namespace cxs::audit

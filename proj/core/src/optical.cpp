#include "cxs/optical.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cxs::optical {

using clifford::Blade;
using xcalc::wedge;

namespace {

Poly on(const Coordinates& coords, const Poly& f) {
  if (f.coordinates() == coords) return f;
  if (f.coordinates().empty() && f.is_constant()) return Poly(coords, f.constant_term());
  throw std::invalid_argument("polynomial is not on the expected coordinates");
}

Poly one(const Coordinates& coords) { return Poly(coords, Scalar(1)); }

PolyForm dz(const Coordinates& coords) {
  return PolyForm::dx(coords, "x") + Scalar::i() * PolyForm::dx(coords, "y");
}

PolyForm dzbar(const Coordinates& coords) {
  return PolyForm::dx(coords, "x") - Scalar::i() * PolyForm::dx(coords, "y");
}

std::vector<Poly> cr_images() {
  const Coordinates& c = chart_coordinates();
  return {Poly::variable(c, "u"), Poly::variable(c, "x"), Poly::variable(c, "y")};
}

bool is_real(const Poly& p) { return p == p.conj(); }
bool is_real(const PolyForm& a) { return a == a.conj(); }

}  // namespace

const Coordinates& cr_coordinates() {
  static const Coordinates c{"u", "x", "y"};
  return c;
}

const Coordinates& chart_coordinates() {
  static const Coordinates c{"u", "x", "y", "r"};
  return c;
}

const Coordinates& r3_coordinates() {
  static const Coordinates c{"x", "y", "u"};
  return c;
}

CRFrame cr_frame(const CRData& data) {
  const Coordinates& c = cr_coordinates();
  const Poly l = on(c, data.l);
  CRFrame f;
  f.lambda = PolyForm::dx(c, "u") + l.conj() * dz(c) + l * dzbar(c);
  f.mu = dz(c);
  const Scalar half(make_rational(1, 2));
  const Scalar half_i(Rational(0), make_rational(1, 2));
  f.z = half * PolyVField::partial(c, "x") + half_i * PolyVField::partial(c, "y") - l * PolyVField::partial(c, "u");
  return f;
}

FrameCheck check_frame(const CRFrame& frame, bool unit_mubar) {
  FrameCheck r;
  r.z_lambda = contract(frame.z, frame.lambda).is_zero();
  r.z_mu = contract(frame.z, frame.mu).is_zero();
  const PolyForm zm = contract(frame.z, frame.mu.conj());
  r.z_mubar = unit_mubar ? zm == PolyForm::function(one(frame.z.coordinates())) : !zm.is_zero();
  r.volume = !wedge(wedge(frame.lambda, frame.mu), frame.mu.conj()).is_zero();
  r.lambda_real = is_real(frame.lambda);
  return r;
}

PolyForm levi_form(const CRFrame& frame) { return wedge(frame.lambda, d(frame.lambda)); }

Poly cr_function_check(const CRData& data, const Poly& f) {
  return cr_frame(data).z.apply(on(cr_coordinates(), f));
}

SectionReport canonical_section(const CRData& data, const Poly& z_fn, const Poly& w_fn, const Poly& f) {
  const Coordinates& c = cr_coordinates();
  const Poly zf = on(c, z_fn), wf = on(c, w_fn);
  if (!cr_function_check(data, zf).is_zero()) throw std::invalid_argument("first function is not a CR function");
  if (!cr_function_check(data, wf).is_zero()) throw std::invalid_argument("second function is not a CR function");
  const PolyForm dzw = wedge(PolyForm::exact(zf), PolyForm::exact(wf));
  if (dzw.is_zero()) throw std::invalid_argument("dz ^ dw vanishes identically");
  Poly coeff;
  if (f.coordinates().empty()) {
    coeff = Poly(c, f.constant_term());
  } else {
    if (f.coordinates().size() != 2) throw std::invalid_argument("section profile must have two arguments");
    coeff = f.substitute({zf, wf});
  }
  SectionReport r;
  r.f_prime = coeff * dzw;
  r.closed = d(r.f_prime).is_zero();
  r.annihilated = contract(cr_frame(data).z, r.f_prime).is_zero();
  r.nonzero = !r.f_prime.is_zero();
  return r;
}

FrameChangeReport frame_change(const CRFrame& frame, const Poly& a, const Poly& b, const Poly& c) {
  const Coordinates& coords = frame.lambda.coordinates();
  const Poly pa = on(coords, a), pb = on(coords, b), pc = on(coords, c);
  if (pa.is_zero() || pb.is_zero()) throw std::invalid_argument("frame change needs nonzero a and b");
  if (!is_real(pa)) throw std::invalid_argument("a must be real");
  FrameChangeReport r;
  r.frame.lambda = pa * frame.lambda;
  r.frame.mu = pb * frame.mu + pc * frame.lambda;
  r.frame.z = frame.z;
  r.check = check_frame(r.frame, false);
  r.direction_invariant = wedge(r.frame.lambda, r.frame.mu) == (pa * pb) * wedge(frame.lambda, frame.mu);
  return r;
}

Poly random_poly(const Coordinates& coords, int max_degree, Rng& rng, double density) {
  std::bernoulli_distribution keep(density);
  Poly p(coords);
  xcalc::Exponents e(coords.size(), 0);
  // Enumerate exponent vectors of total degree <= max_degree in a fixed order.
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == coords.size()) {
      if (keep(rng)) p.add_term(e, random_scalar(rng, 2, 3));
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[i] = static_cast<unsigned>(k);
      self(self, i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(rec, 0, max_degree);
  return p;
}

Poly lift_to_chart(const Poly& f) {
  const Coordinates& chart = chart_coordinates();
  if (f.coordinates() == chart) return f;
  if (f.coordinates().empty()) return Poly(chart, f.constant_term());
  if (f.coordinates() == cr_coordinates()) return f.substitute(cr_images());
  throw std::invalid_argument("cannot lift polynomial to the (u, x, y, r) chart");
}

PolyForm lift_to_chart(const PolyForm& a) {
  if (a.coordinates() == chart_coordinates()) return a;
  if (a.coordinates() != cr_coordinates()) throw std::invalid_argument("cannot lift form to the (u, x, y, r) chart");
  return a.pullback(cr_images());
}

PolyVField lift_to_chart(const PolyVField& v) {
  if (v.coordinates() == chart_coordinates()) return v;
  if (v.coordinates() != cr_coordinates()) throw std::invalid_argument("cannot lift field to the (u, x, y, r) chart");
  std::vector<Poly> comps;
  for (const auto& c : v.components()) comps.push_back(lift_to_chart(c));
  comps.push_back(Poly(chart_coordinates()));
  return PolyVField(chart_coordinates(), std::move(comps));
}

OpticalChart rt_metric(const CRData& data, const Poly& p, const PolyForm& xi) {
  const Coordinates& chart = chart_coordinates();
  OpticalChart out;
  out.data = data;
  out.p = lift_to_chart(p);
  out.xi = lift_to_chart(xi);
  if (!out.xi.is_zero() && out.xi.degree() != 1) throw std::invalid_argument("xi must be a 1-form");
  if (!is_real(out.p)) throw std::invalid_argument("P must be real");
  if (!is_real(out.xi)) throw std::invalid_argument("xi must be real");
  const CRFrame frame = cr_frame(data);
  out.lambda = lift_to_chart(frame.lambda);
  out.mu = lift_to_chart(frame.mu);
  const Poly p2 = out.p * out.p;
  const PolyForm volume = p2 * wedge(wedge(wedge(out.mu, out.mu.conj()), out.lambda), out.xi);
  if (volume.is_zero()) throw std::invalid_argument("degenerate metric: P^2 (mu ^ mubar ^ lambda) ^ xi vanishes");
  out.metric = p2 * SymTensor2::sym(out.mu, out.mu.conj()) + SymTensor2::sym(out.lambda, out.xi);
  out.k = PolyVField::partial(chart, "r");
  return out;
}

SignatureSample signature_sample(const OpticalChart& chart, std::size_t points, Rng& rng, double tol) {
  SignatureSample s;
  s.min_abs_eigenvalue = std::numeric_limits<double>::infinity();
  const Poly det = chart.metric.determinant();
  const std::size_t n = chart.metric.dim();
  for (std::size_t k = 0; k < points; ++k) {
    Vector pt(n);
    // Points where the metric is exactly singular are resampled.
    for (int tries = 0; tries < 100; ++tries) {
      for (auto& x : pt) x = Scalar(random_rational(rng, 3, 4));
      if (!det.evaluate(pt).is_zero()) break;
    }
    const Matrix g = chart.metric.evaluate(pt);
    Eigen::MatrixXd m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = g(i, j).re().get_d();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    std::size_t pos = 0, neg = 0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      const double ev = es.eigenvalues()(i);
      s.min_abs_eigenvalue = std::min(s.min_abs_eigenvalue, std::abs(ev));
      if (ev > tol) ++pos;
      if (ev < -tol) ++neg;
    }
    ++s.points;
    if (g.is_real() && pos == 3 && neg == 1) ++s.lorentzian;
  }
  return s;
}

RTReport rt_audit(const OpticalChart& chart, std::size_t points, Rng& rng, double tol) {
  RTReport r;
  r.symmetric = chart.metric.is_symmetric();
  r.k_null = chart.metric(chart.k, chart.k).is_zero();
  r.lambda_wedge_gk = wedge(chart.lambda, chart.metric.lower(chart.k)).is_zero();
  r.signature = signature_sample(chart, points, rng, tol);
  return r;
}

NullPlaneData null_plane_from_chart(const OpticalChart& chart) {
  return {chart_coordinates(), {chart.k, lift_to_chart(cr_frame(chart.data).z)}};
}

bool total_nullity(const NullPlaneData& n, const SymTensor2& g) {
  for (std::size_t a = 0; a < n.span.size(); ++a)
    for (std::size_t b = a; b < n.span.size(); ++b)
      if (!g(n.span[a], n.span[b]).is_zero()) return false;
  return true;
}

bool intersection_is_k(const NullPlaneData& n, const PolyVField& k) {
  if (!(k == k.conj())) return false;
  if (!xcalc::membership_in_span(k, n.span)) return false;
  std::vector<PolyVField> all = n.span;
  for (const auto& v : n.span) all.push_back(v.conj());
  if (all.size() < 4 || !xcalc::wedge_fields(all).is_zero()) return false;
  // dim(N + N̄) = 3 iff some three of the four fields are independent.
  for (std::size_t skip = 0; skip < all.size(); ++skip) {
    std::vector<PolyVField> three;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (i != skip) three.push_back(all[i]);
    if (!xcalc::wedge_fields(three).is_zero()) return true;
  }
  return false;
}

bool integrability_check(const NullPlaneData& n) {
  if (n.span.size() != 2) throw std::invalid_argument("integrability check expects a two-field span");
  return xcalc::membership_in_span(xcalc::lie_bracket(n.span[0], n.span[1]), n.span);
}

PointFrame rt_point_frame(const OpticalChart& chart, const Vector& point) {
  const std::size_t n = chart_coordinates().size();
  auto covector = [&](const PolyForm& a) {
    Vector v(n);
    for (const auto& [b, c] : a.evaluate(point)) v[static_cast<std::size_t>(std::countr_zero(b))] = c;
    return v;
  };
  const Scalar p = chart.p.evaluate(point);
  const Vector dx = covector(PolyForm::dx(chart_coordinates(), "x"));
  const Vector dy = covector(PolyForm::dx(chart_coordinates(), "y"));
  const Vector lam = covector(chart.lambda);
  const Vector xi = covector(chart.xi);
  const Scalar half(make_rational(1, 2));
  std::vector<Vector> rows{p * dx, p * dy, half * (lam + xi), half * (lam - xi)};
  PointFrame f;
  f.point = point;
  f.sig = clifford::Signature(3, 1);
  f.coframe = Matrix::from_columns(rows).transpose();
  inverse(f.coframe);  // throws std::domain_error when singular
  Matrix eta = Matrix::diagonal(f.sig.metric_diagonal());
  if (!(f.coframe.transpose() * eta * f.coframe == chart.metric.evaluate(point)))
    throw std::logic_error("orthonormal coframe does not reproduce the metric");
  return f;
}

std::map<Blade, Scalar> point_hodge_star(const std::map<Blade, Scalar>& form, const PointFrame& frame) {
  const std::size_t n = frame.coframe.rows();
  Matrix fm(n, n);
  for (const auto& [b, c] : form) {
    if (clifford::grade(b) != 2) throw std::invalid_argument("point_hodge_star expects a 2-form");
    const auto i = static_cast<std::size_t>(std::countr_zero(b));
    const auto j = static_cast<std::size_t>(std::countr_zero(b & (b - 1)));
    fm(i, j) = c;
    fm(j, i) = -c;
  }
  const Matrix ainv = inverse(frame.coframe);
  const Matrix framed = ainv.transpose() * fm * ainv;
  const Vector eta = frame.sig.metric_diagonal();

  clifford::ExteriorElement bivector(frame.sig);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      bivector.add_term((Blade{1} << a) | (Blade{1} << b), eta[a] * eta[b] * framed(a, b));
  const clifford::ExteriorElement starred = clifford::hodge_star(bivector);

  Matrix sm(n, n);
  for (const auto& [b, c] : starred.coeffs()) {
    const auto a = static_cast<std::size_t>(std::countr_zero(b));
    const auto bb = static_cast<std::size_t>(std::countr_zero(b & (b - 1)));
    Scalar lowered = eta[a] * eta[bb] * c;
    sm(a, bb) = lowered;
    sm(bb, a) = -lowered;
  }
  const Matrix back = frame.coframe.transpose() * sm * frame.coframe;
  std::map<Blade, Scalar> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!back(i, j).is_zero()) out.emplace((Blade{1} << i) | (Blade{1} << j), back(i, j));
  return out;
}

DualityReport null_2form(const NullPlaneData& n, const SymTensor2& g, const PointFrame& frame) {
  if (n.span.size() != 2) throw std::invalid_argument("null_2form expects a two-field span");
  if (!total_nullity(n, g)) throw std::invalid_argument("span is not totally null");
  DualityReport r;
  r.f = wedge(g.lower(n.span[0]), g.lower(n.span[1]));
  r.iota = clifford::eta_squared(frame.sig) == 1 ? Scalar(1) : Scalar::i();
  const auto at = r.f.evaluate(frame.point);
  r.f_nonzero = !at.empty();
  r.f_wedge_fbar_zero = wedge(r.f, r.f.conj()).is_zero();
  const auto star = point_hodge_star(at, frame);
  auto scaled = [&](const Scalar& s) {
    std::map<Blade, Scalar> out;
    for (const auto& [b, c] : at) out.emplace(b, s * c);
    return out;
  };
  if (r.f_nonzero) {
    if (star == scaled(r.iota))
      r.sign = 1;
    else if (star == scaled(-r.iota))
      r.sign = -1;
  }
  return r;
}

FlatChart flat_chart(const clifford::Signature& sig) {
  FlatChart f;
  for (int i = 1; i <= sig.dim(); ++i) f.coords.push_back("x" + std::to_string(i));
  f.metric = SymTensor2(f.coords);
  const Vector eta = sig.metric_diagonal();
  std::vector<PolyForm> dxs;
  for (const auto& c : f.coords) dxs.push_back(PolyForm::dx(f.coords, c));
  for (std::size_t i = 0; i < f.coords.size(); ++i)
    f.metric += Poly(f.coords, eta[i]) * SymTensor2::sym(dxs[i], dxs[i]);
  f.frame.point = Vector(f.coords.size());
  f.frame.coframe = Matrix::identity(f.coords.size());
  f.frame.sig = sig;
  return f;
}

SpinorPlane null_plane_from_spinor(const spinor::GammaRep& rep, const spinor::Intertwiner& pair, const Vector& phi) {
  if (rep.n != 2) throw std::invalid_argument("null planes from spinors are built in dimension 4");
  SpinorPlane out;
  out.chirality = spinor::chirality_of(rep, phi);
  if (is_zero(phi)) throw std::invalid_argument("zero spinor");
  if (out.chirality == spinor::Chirality::Mixed) throw std::invalid_argument("spinor is not a Weyl spinor");
  std::vector<Vector> cols;
  for (const auto& g : rep.gammas) cols.push_back(g * phi);
  out.basis = nullspace(Matrix::from_columns(cols));
  if (out.basis.size() != 2) throw std::logic_error("Weyl spinor annihilator is not two-dimensional");

  const FlatChart chart = flat_chart(rep.sig);
  out.plane.coords = chart.coords;
  for (const auto& v : out.basis) {
    std::vector<Poly> comps;
    for (const auto& c : v) comps.push_back(Poly(chart.coords, c));
    out.plane.span.emplace_back(chart.coords, std::move(comps));
  }
  const Vector phi_c = spinor::charge_conjugate(phi, pair.c);
  out.pairing = dot(pair.b * phi_c, phi);
  std::vector<Vector> conj_basis;
  for (const auto& v : out.basis) conj_basis.push_back(conj(v));
  out.real_plane = same_span(out.basis, conj_basis);
  std::vector<Vector> both = out.basis;
  both.insert(both.end(), conj_basis.begin(), conj_basis.end());
  out.transverse = span_rank(both) == 4;
  out.contains_real_null = !intersect_spans(out.basis, conj_basis).empty();
  return out;
}

PolyVField gradient(const Poly& f) {
  const Poly g = on(r3_coordinates(), f);
  return PolyVField(r3_coordinates(), {g.diff(0), g.diff(1), g.diff(2)});
}

PolyVField cross(const PolyVField& a, const PolyVField& b) {
  if (a.dim() != 3 || b.dim() != 3) throw std::invalid_argument("cross product needs 3-dimensional fields");
  return PolyVField(a.coordinates(), {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]});
}

Poly divergence(const PolyVField& f) {
  Poly out(f.coordinates());
  for (std::size_t i = 0; i < f.dim(); ++i) out += f[i].diff(i);
  return out;
}

ConjectureReport conjecture_verify(const PolyVField& f, const Poly& z, const Poly& w) {
  if (f.coordinates() != r3_coordinates()) throw std::invalid_argument("F must live on (x, y, u)");
  ConjectureReport r;
  r.div_free = divergence(f).is_zero();
  r.nondegenerate = !cross(f, f.conj()).is_zero();
  r.cross = cross(gradient(z), gradient(w));
  r.matches = f == r.cross;
  return r;
}

}  // namespace cxs::optical

#include "cxs/dirac.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cxs::dirac {

namespace {

using CVec = std::vector<std::complex<double>>;
using CMat = std::vector<CVec>;

CMat to_double(const Matrix& m) {
  CMat out(m.rows(), CVec(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).to_complex();
  return out;
}

CVec mat_vec(const CMat& m, const CVec& v) {
  CVec out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) out[r] += m[r][c] * v[c];
  return out;
}

RVector padded(const RVector& a, std::size_t n) { return a.empty() ? RVector(n, Rational(0)) : a; }

void require_normalized(const Intertwiner& pair) {
  if (!pair.normalized) throw std::invalid_argument("current needs a normalized intertwiner pair");
}

// Bγ_{2n+1}C⁻¹: j^μ = i^{n+1} (M conj ψ)ᵀ γ^μ ψ.
Matrix current_form(const GammaRep& rep, const Intertwiner& pair) {
  require_normalized(pair);
  return pair.b * rep.chirality * inverse(pair.c);
}

}  // namespace

void require_lorentzian(const GammaRep& rep) {
  if (rep.sig.l != 1 || rep.sig.k != 2 * rep.n - 1)
    throw std::invalid_argument("Dirac plane waves need signature (2n-1, 1)");
}

Matrix raised_gamma(const GammaRep& rep, int mu) {
  if (mu < 0 || mu >= 2 * rep.n) throw std::out_of_range("gamma index out of range");
  const Matrix& g = rep.gammas[static_cast<std::size_t>(mu)];
  return mu == 2 * rep.n - 1 ? -g : g;
}

Matrix dirac_matrix(const GammaRep& rep, const RVector& q, const Rational& m) {
  require_lorentzian(rep);
  if (q.size() != static_cast<std::size_t>(2 * rep.n)) throw std::invalid_argument("momentum has wrong length");
  Matrix out = Scalar(-m) * Matrix::identity(rep.spinor_dim());
  for (int mu = 0; mu < 2 * rep.n; ++mu)
    if (sgn(q[mu]) != 0) out += Scalar(Rational(0), q[mu]) * raised_gamma(rep, mu);
  return out;
}

bool on_shell(const RVector& q, const Rational& m) {
  if (q.empty()) return false;
  Rational spatial = m * m;
  for (std::size_t i = 0; i + 1 < q.size(); ++i) spatial += q[i] * q[i];
  return q.back() * q.back() == spatial;
}

RVector kinetic(const RVector& p, const Rational& e, const RVector& a) {
  RVector q = p;
  if (a.empty()) return q;
  if (a.size() != p.size()) throw std::invalid_argument("potential has wrong length");
  for (std::size_t i = 0; i < q.size(); ++i) q[i] -= e * a[i];
  return q;
}

std::vector<Vector> solve_amplitudes(const GammaRep& rep, const RVector& p, const Rational& m, const Rational& e,
                                     const RVector& a) {
  return nullspace(dirac_matrix(rep, kinetic(p, e, a), m));
}

RVector rational_on_shell(const RVector& s, const Rational& m) {
  Rational sigma = 0;
  for (const auto& x : s) sigma += x * x;
  if (sigma == 1) throw std::invalid_argument("|s|^2 = 1 has no on-shell image");
  RVector q;
  q.reserve(s.size() + 1);
  for (const auto& x : s) q.push_back(2 * m * x / (1 - sigma));
  q.push_back(m * (1 + sigma) / (1 - sigma));
  return q;
}

PlaneWave random_plane_wave(const GammaRep& rep, const Rational& m, const Rational& e, const RVector& a, Rng& rng) {
  require_lorentzian(rep);
  const std::size_t dim = static_cast<std::size_t>(2 * rep.n);
  RVector s(dim - 1);
  RVector q;
  for (;;) {
    for (auto& x : s) x = random_rational(rng, 2, 3);
    Rational sigma = 0;
    for (const auto& x : s) sigma += x * x;
    if (sigma == 1) continue;
    q = rational_on_shell(s, m);
    break;
  }
  PlaneWave w;
  w.m = m;
  w.e = e;
  w.a = a;
  w.p = q;
  if (!a.empty())
    for (std::size_t i = 0; i < dim; ++i) w.p[i] += e * a[i];
  auto kernel = solve_amplitudes(rep, w.p, m, e, a);
  if (kernel.empty()) throw std::logic_error("on-shell momentum produced an empty kernel");
  w.amplitude.assign(rep.spinor_dim(), Scalar(0));
  do {
    for (const auto& k : kernel) w.amplitude = w.amplitude + random_scalar(rng, 2, 2) * k;
  } while (is_zero(w.amplitude));
  return w;
}

WaveFunction random_superposition(const GammaRep& rep, std::size_t count, const Rational& m, const Rational& e,
                                  const RVector& a, Rng& rng) {
  WaveFunction psi;
  for (std::size_t i = 0; i < count; ++i) psi.waves.push_back(random_plane_wave(rep, m, e, a, rng));
  return psi;
}

void validate(const GammaRep& rep, const WaveFunction& psi) {
  require_lorentzian(rep);
  const std::size_t dim = static_cast<std::size_t>(2 * rep.n);
  for (const auto& w : psi.waves) {
    if (w.p.size() != dim) throw std::invalid_argument("plane wave momentum has wrong length");
    if (w.amplitude.size() != rep.spinor_dim()) throw std::invalid_argument("plane wave amplitude has wrong length");
    if (!w.a.empty() && w.a.size() != dim) throw std::invalid_argument("plane wave potential has wrong length");
    const auto& first = psi.waves.front();
    if (w.m != first.m || w.e != first.e || padded(w.a, dim) != padded(first.a, dim))
      throw std::invalid_argument("plane waves disagree on (m, e, A)");
  }
}

WaveFunction charge_conjugate(const WaveFunction& psi, const Matrix& c) {
  const Matrix c_inv = inverse(c);
  WaveFunction out;
  for (const auto& w : psi.waves) {
    PlaneWave v = w;
    for (auto& x : v.p) x = -x;
    v.amplitude = c_inv * conj(w.amplitude);
    v.e = -w.e;
    out.waves.push_back(std::move(v));
  }
  return out;
}

Vector current_at(const GammaRep& rep, const Intertwiner& pair, const Vector& psi) {
  const Matrix form = current_form(rep, pair);
  const Vector left = form * conj(psi);
  const Scalar factor = i_pow(rep.n + 1);
  Vector j;
  for (int mu = 0; mu < 2 * rep.n; ++mu) j.push_back(factor * dot(left, raised_gamma(rep, mu) * psi));
  return j;
}

bool ExpPoly::is_real() const {
  for (const auto& [f, c] : terms) {
    RVector neg = f;
    for (auto& x : neg) x = -x;
    auto it = terms.find(neg);
    if (it == terms.end()) {
      if (!is_zero(c)) return false;
      continue;
    }
    if (!(it->second == conj(c))) return false;
  }
  return true;
}

std::map<RVector, Scalar> ExpPoly::divergence() const {
  std::map<RVector, Scalar> out;
  for (const auto& [f, c] : terms) {
    Scalar s;
    for (std::size_t mu = 0; mu < f.size(); ++mu) s += Scalar(Rational(0), f[mu]) * c[mu];
    if (!s.is_zero()) out.emplace(f, s);
  }
  return out;
}

std::vector<std::complex<double>> ExpPoly::evaluate(const std::vector<double>& x) const {
  std::vector<std::complex<double>> out;
  for (const auto& [f, c] : terms) {
    if (out.empty()) out.resize(c.size());
    double phase = 0;
    for (std::size_t mu = 0; mu < f.size(); ++mu) phase += f[mu].get_d() * x[mu];
    std::complex<double> e = std::polar(1.0, phase);
    for (std::size_t mu = 0; mu < c.size(); ++mu) out[mu] += c[mu].to_complex() * e;
  }
  return out;
}

ExpPoly current(const GammaRep& rep, const Intertwiner& pair, const WaveFunction& psi) {
  validate(rep, psi);
  const Matrix form = current_form(rep, pair);
  const Scalar factor = i_pow(rep.n + 1);
  std::vector<Matrix> raised;
  for (int mu = 0; mu < 2 * rep.n; ++mu) raised.push_back(raised_gamma(rep, mu));

  std::vector<Vector> left;
  for (const auto& w : psi.waves) left.push_back(form * conj(w.amplitude));

  ExpPoly out;
  for (std::size_t b = 0; b < psi.waves.size(); ++b) {
    std::vector<Vector> gpsi;
    for (const auto& g : raised) gpsi.push_back(g * psi.waves[b].amplitude);
    for (std::size_t a = 0; a < psi.waves.size(); ++a) {
      // ψ_c carries exp(−i p_a x), ψ carries exp(i p_b x).
      RVector f = psi.waves[b].p;
      for (std::size_t mu = 0; mu < f.size(); ++mu) f[mu] -= psi.waves[a].p[mu];
      auto [it, inserted] = out.terms.try_emplace(f, Vector(raised.size()));
      for (std::size_t mu = 0; mu < raised.size(); ++mu) it->second[mu] += factor * dot(left[a], gpsi[mu]);
    }
  }
  for (auto it = out.terms.begin(); it != out.terms.end();)
    it = is_zero(it->second) ? out.terms.erase(it) : std::next(it);
  return out;
}

Vector value_with_phases(const WaveFunction& psi, const std::vector<Scalar>& phases) {
  if (phases.size() != psi.waves.size()) throw std::invalid_argument("one phase per plane wave expected");
  Vector v;
  for (std::size_t a = 0; a < psi.waves.size(); ++a) {
    Vector term = phases[a] * psi.waves[a].amplitude;
    v = v.empty() ? term : v + term;
  }
  return v;
}

Scalar unit_phase(const Rational& t) {
  Rational d = 1 + t * t;
  return Scalar((1 - t * t) / d, 2 * t / d);
}

std::vector<std::complex<double>> evaluate(const WaveFunction& psi, const std::vector<double>& x) {
  std::vector<std::complex<double>> v;
  for (const auto& w : psi.waves) {
    if (v.empty()) v.resize(w.amplitude.size());
    double phase = 0;
    for (std::size_t mu = 0; mu < w.p.size(); ++mu) phase += w.p[mu].get_d() * x[mu];
    std::complex<double> e = std::polar(1.0, phase);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += w.amplitude[i].to_complex() * e;
  }
  return v;
}

NumericDivergence numeric_divergence(const GammaRep& rep, const Intertwiner& pair, const WaveFunction& psi,
                                     std::size_t points, Rng& rng, double h) {
  validate(rep, psi);
  const std::size_t dim = static_cast<std::size_t>(2 * rep.n);
  const CMat form = to_double(current_form(rep, pair));
  std::vector<CMat> raised;
  for (int mu = 0; mu < 2 * rep.n; ++mu) raised.push_back(to_double(raised_gamma(rep, mu)));
  const std::complex<double> factor = i_pow(rep.n + 1).to_complex();

  auto j_mu = [&](const std::vector<double>& x, std::size_t mu) {
    CVec v = evaluate(psi, x);
    CVec cv(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) cv[i] = std::conj(v[i]);
    CVec left = mat_vec(form, cv);
    CVec right = mat_vec(raised[mu], v);
    std::complex<double> s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += left[i] * right[i];
    return factor * s;
  };

  NumericDivergence out;
  double fmax = 0;
  for (const auto& [f, c] : current(rep, pair, psi).terms)
    for (std::size_t mu = 0; mu < dim; ++mu) {
      out.scale += std::abs(f[mu].get_d()) * std::abs(c[mu].to_complex());
      fmax = std::max(fmax, std::abs(f[mu].get_d()));
    }
  if (out.scale == 0) out.scale = 1;
  if (h <= 0) h = fmax > 0 ? 0.01 / fmax : 1e-3;

  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  for (std::size_t k = 0; k < points; ++k) {
    std::vector<double> x(dim);
    for (auto& xi : x) xi = coord(rng);
    std::complex<double> div = 0;
    for (std::size_t mu = 0; mu < dim; ++mu) {
      auto shifted = [&](double t) {
        auto y = x;
        y[mu] += t;
        return j_mu(y, mu);
      };
      div += (-shifted(2 * h) + 8.0 * shifted(h) - 8.0 * shifted(-h) + shifted(-2 * h)) / (12 * h);
    }
    out.max_relative = std::max(out.max_relative, std::abs(div) / out.scale);
  }
  return out;
}

bool conjugate_equation_check(const GammaRep& rep, const Intertwiner& pair, const WaveFunction& psi) {
  validate(rep, psi);
  const std::size_t dim = static_cast<std::size_t>(2 * rep.n);
  const Matrix c_inv = inverse(pair.c);
  for (const auto& w : psi.waves) {
    // γ^μ(∂_μ + ieA_μ)ψ_c = mψ_c with ψ_c ∝ exp(−ipx): kinetic momentum −p + eA.
    RVector q(dim);
    const RVector a = padded(w.a, dim);
    for (std::size_t mu = 0; mu < dim; ++mu) q[mu] = -w.p[mu] + w.e * a[mu];
    Vector v = c_inv * conj(w.amplitude);
    if (!is_zero(dirac_matrix(rep, q, w.m) * v)) return false;
  }
  return true;
}

}  // namespace cxs::dirac

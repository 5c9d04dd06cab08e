#pragma once

#include <complex>
#include <map>
#include <vector>

#include "cxs/random.hpp"
#include "cxs/spinor.hpp"

// Plane-wave solutions of γ^μ(∂_μ − ieA_μ)ψ = mψ in signature (2n−1,1) and the
// current j^μ(ψ) = i^{n+1} <Bγ_{2n+1}ψ_c, γ^μψ>.
//
// Indices are raised with g = diag(+1,…,+1,−1): γ^μ = γ_μ except γ^{2n} = −γ_{2n}.
// A plane wave is u·exp(i p_μ x^μ); p and A carry lower indices.

namespace cxs::dirac {

using spinor::GammaRep;
using spinor::Intertwiner;
using RVector = std::vector<Rational>;

struct PlaneWave {
  RVector p;
  Vector amplitude;
  Rational m{0};
  Rational e{0};
  RVector a;  // constant potential, empty means zero
};

struct WaveFunction {
  std::vector<PlaneWave> waves;
};

/// Throws std::invalid_argument unless rep has signature (2n−1, 1).
void require_lorentzian(const GammaRep& rep);

/// γ^μ (0-based μ).
Matrix raised_gamma(const GammaRep& rep, int mu);

/// iγ^μ q_μ − m·id.
Matrix dirac_matrix(const GammaRep& rep, const RVector& q, const Rational& m);

/// q_{2n}² = q_1² + … + q_{2n−1}² + m².
bool on_shell(const RVector& q, const Rational& m);

/// Kinetic momentum p − eA (A empty counts as zero).
RVector kinetic(const RVector& p, const Rational& e, const RVector& a);

/// Kernel of iγ^μ(p_μ − eA_μ) − m. Empty when p is off-shell.
std::vector<Vector> solve_amplitudes(const GammaRep& rep, const RVector& p, const Rational& m,
                                     const Rational& e = 0, const RVector& a = {});

/// Rational on-shell kinetic momentum from a rational spatial parameter s (|s|² != 1):
/// q = 2ms/(1−|s|²), q_{2n} = m(1+|s|²)/(1−|s|²).
RVector rational_on_shell(const RVector& s, const Rational& m);

/// On-shell wave with random momentum and a random kernel amplitude.
PlaneWave random_plane_wave(const GammaRep& rep, const Rational& m, const Rational& e, const RVector& a, Rng& rng);

WaveFunction random_superposition(const GammaRep& rep, std::size_t count, const Rational& m, const Rational& e,
                                  const RVector& a, Rng& rng);

/// Throws std::invalid_argument when summands disagree on (m, e, A) or have the wrong shape.
void validate(const GammaRep& rep, const WaveFunction& psi);

/// ψ_c: momenta −p, amplitudes C⁻¹conj(u), charge −e.
WaveFunction charge_conjugate(const WaveFunction& psi, const Matrix& c);

/// j^μ at a single spinor value ψ. Throws std::invalid_argument for unnormalized intertwiners.
Vector current_at(const GammaRep& rep, const Intertwiner& pair, const Vector& psi);

/// Exponential polynomial Σ_f c_f exp(i f_μ x^μ), one 2n-vector of coefficients per frequency.
struct ExpPoly {
  std::map<RVector, Vector> terms;

  /// c_{−f} = conj(c_f) for every f, so the function is real-valued.
  bool is_real() const;
  /// Σ_μ ∂_μ of the components: coefficient i f_μ c^μ_f per frequency, zero terms dropped.
  std::map<RVector, Scalar> divergence() const;
  std::vector<std::complex<double>> evaluate(const std::vector<double>& x) const;
};

/// j^μ(ψ) as an exponential polynomial in x.
ExpPoly current(const GammaRep& rep, const Intertwiner& pair, const WaveFunction& psi);

/// ψ evaluated with the phase of wave a replaced by phases[a] (|phases[a]| = 1 for a true point).
Vector value_with_phases(const WaveFunction& psi, const std::vector<Scalar>& phases);

/// (1 − t² + 2ti)/(1 + t²), an exact point on the unit circle.
Scalar unit_phase(const Rational& t);

/// ψ(x) in floating point.
std::vector<std::complex<double>> evaluate(const WaveFunction& psi, const std::vector<double>& x);

struct NumericDivergence {
  double max_relative = 0;
  double scale = 0;
};

/// Five-point central differences of j computed from ψ(x) in floating point, at random points.
/// Relative to Σ_f Σ_μ |f_μ||c^μ_f| of the exact current. h = 0 picks 0.01 / max |f_μ|.
NumericDivergence numeric_divergence(const GammaRep& rep, const Intertwiner& pair, const WaveFunction& psi,
                                     std::size_t points, Rng& rng, double h = 0);

/// Each summand of ψ_c satisfies (iγ^μ(−p_μ + eA_μ) − m) C⁻¹conj(u) = 0.
bool conjugate_equation_check(const GammaRep& rep, const Intertwiner& pair, const WaveFunction& psi);

}  // namespace cxs::dirac

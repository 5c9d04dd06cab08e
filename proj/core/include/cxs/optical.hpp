#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cxs/forms.hpp"
#include "cxs/random.hpp"
#include "cxs/spinor.hpp"

// CR structures on a chart (u, x, y) with z = x + iy, Robinson–Trautman type
// metrics on (u, x, y, r), totally null planes and the 2-forms they define.

namespace cxs::optical {

using xcalc::Coordinates;
using xcalc::Poly;
using xcalc::PolyForm;
using xcalc::PolyVField;
using xcalc::SymTensor2;

/// {"u", "x", "y"}
const Coordinates& cr_coordinates();
/// {"u", "x", "y", "r"}
const Coordinates& chart_coordinates();
/// {"x", "y", "u"}, ordering used for the vector-calculus form of the conjecture.
const Coordinates& r3_coordinates();

struct CRData {
  Poly l;  // on cr_coordinates(); coordinate-free constants are accepted
};

struct CRFrame {
  PolyForm lambda;  // du + conj(L)dz + L dz̄
  PolyForm mu;      // dz
  PolyVField z;     // ∂_z̄ − L∂_u
};

struct FrameCheck {
  bool z_lambda = false;        // Z⌟λ = 0
  bool z_mu = false;            // Z⌟μ = 0
  bool z_mubar = false;         // Z⌟μ̄ = 1 (or just ≠ 0 after a frame change)
  bool volume = false;          // λ∧μ∧μ̄ ≢ 0
  bool lambda_real = false;
  bool ok() const { return z_lambda && z_mu && z_mubar && volume && lambda_real; }
};

CRFrame cr_frame(const CRData& data);
/// unit_mubar: require Z⌟μ̄ = 1 rather than merely nonzero.
FrameCheck check_frame(const CRFrame& frame, bool unit_mubar = true);

/// λ∧dλ; zero exactly when the structure is Levi-flat.
PolyForm levi_form(const CRFrame& frame);

/// Z f = ∂_z̄ f − L ∂_u f; zero iff f is a CR function.
Poly cr_function_check(const CRData& data, const Poly& f);

struct SectionReport {
  PolyForm f_prime;          // f(z, w) dz∧dw
  bool closed = false;       // dF′ = 0
  bool annihilated = false;  // Z⌟F′ = 0
  bool nonzero = false;
  bool ok() const { return closed && annihilated && nonzero; }
};

/// f is a polynomial in two formal arguments (any two coordinate names).
/// Throws std::invalid_argument unless z_fn and w_fn are CR functions with dz∧dw ≢ 0.
SectionReport canonical_section(const CRData& data, const Poly& z_fn, const Poly& w_fn, const Poly& f);

struct FrameChangeReport {
  CRFrame frame;
  FrameCheck check;                 // with Z⌟μ̄ only required nonzero
  bool direction_invariant = false; // new λ∧μ = a·b·(old λ∧μ)
  bool ok() const { return check.ok() && direction_invariant; }
};

/// λ ↦ aλ, μ ↦ bμ + cλ. Z is kept: it still spans the annihilator, with Z⌟μ̄′ = conj(b).
/// Throws std::invalid_argument when a or b vanishes identically or a is not real.
FrameChangeReport frame_change(const CRFrame& frame, const Poly& a, const Poly& b, const Poly& c);

/// Polynomial on the CR chart with random small Gaussian-rational coefficients.
Poly random_poly(const Coordinates& coords, int max_degree, Rng& rng, double density = 0.5);

struct OpticalChart {
  CRData data;
  Poly p;           // on chart_coordinates()
  PolyForm xi;      // 1-form on chart_coordinates()
  PolyForm lambda;  // π*λ
  PolyForm mu;      // π*μ
  SymTensor2 metric;
  PolyVField k;     // ∂_r
};

/// g = P² μ⊗_sym μ̄ + λ⊗_sym ξ with α⊗_sym β = ½(α⊗β + β⊗α).
/// Throws std::invalid_argument unless P and ξ are real and P²(μ∧μ̄∧λ)∧ξ ≢ 0.
OpticalChart rt_metric(const CRData& data, const Poly& p, const PolyForm& xi);

/// Lifts a function of (u, x, y) to (u, x, y, r).
Poly lift_to_chart(const Poly& f);
PolyForm lift_to_chart(const PolyForm& a);
/// Coordinate lift with zero ∂_r component.
PolyVField lift_to_chart(const PolyVField& v);

struct SignatureSample {
  std::size_t points = 0;
  std::size_t lorentzian = 0;  // points with three eigenvalues > tol and one < −tol
  double min_abs_eigenvalue = 0;
  bool ok() const { return points > 0 && points == lorentzian; }
};

/// Evaluates g at random rational points and checks signature (3,1) numerically.
SignatureSample signature_sample(const OpticalChart& chart, std::size_t points, Rng& rng, double tol = 1e-9);

struct RTReport {
  bool symmetric = false;
  bool k_null = false;            // g(k,k) = 0
  bool lambda_wedge_gk = false;   // π*λ ∧ g(k) = 0
  SignatureSample signature;
  bool ok() const { return symmetric && k_null && lambda_wedge_gk && signature.ok(); }
};

RTReport rt_audit(const OpticalChart& chart, std::size_t points, Rng& rng, double tol = 1e-9);

struct NullPlaneData {
  Coordinates coords;
  std::vector<PolyVField> span;
};

/// span{∂_r, Ẑ}, Ẑ the lift of Z.
NullPlaneData null_plane_from_chart(const OpticalChart& chart);

/// All pairwise products g(n_a, n_b), a <= b, vanish identically.
bool total_nullity(const NullPlaneData& n, const SymTensor2& g);

/// N ∩ N̄ = ℂ⊗K for K spanned by the real field k: k ∈ N and dim(N + N̄) = 3.
bool intersection_is_k(const NullPlaneData& n, const PolyVField& k);

/// [X, Y] lies in span{X, Y} for the two spanning fields.
bool integrability_check(const NullPlaneData& n);

/// Orthonormal coframe at a point: θ^a = Σ_i coframe(a, i) dx^i with g = Σ η_a (θ^a)².
struct PointFrame {
  Vector point;
  Matrix coframe;
  clifford::Signature sig;
};

/// θ = (P dx, P dy, (λ+ξ)/2, (λ−ξ)/2), signature (3,1). Throws std::domain_error when singular at the point.
PointFrame rt_point_frame(const OpticalChart& chart, const Vector& point);

struct DualityReport {
  PolyForm f;                 // g(n_1) ∧ g(n_2)
  Scalar iota;
  int sign = 0;               // ★F = sign·ιF at the point, 0 when neither
  bool f_nonzero = false;
  bool f_wedge_fbar_zero = false;
};

/// F = g(n₁)∧g(n₂) and its duality at the frame's point. Throws std::invalid_argument for non-null spans.
DualityReport null_2form(const NullPlaneData& n, const SymTensor2& g, const PointFrame& frame);

/// ★ on a 2-form at a point, computed by raising indices to a bivector in the orthonormal frame,
/// applying ★ω = κ(ηκ⁻¹ω) and lowering again. Components are on coordinate blades.
std::map<clifford::Blade, Scalar> point_hodge_star(const std::map<clifford::Blade, Scalar>& form, const PointFrame& frame);

/// Constant metric diag(+1 × k, −1 × l) on coordinates x1..x4 with the identity coframe.
struct FlatChart {
  Coordinates coords;
  SymTensor2 metric;
  PointFrame frame;
};
FlatChart flat_chart(const clifford::Signature& sig);

struct SpinorPlane {
  NullPlaneData plane;
  std::vector<Vector> basis;     // constant vectors n with γ(n)φ = 0
  spinor::Chirality chirality;
  Scalar pairing;                // <Bφ_c, φ>
  bool real_plane = false;       // N = N̄
  bool transverse = false;       // N ∩ N̄ = 0
  bool contains_real_null = false;
};

/// N = {n : γ(n)φ = 0} for a Weyl spinor in dimension 4.
/// Throws std::invalid_argument for zero or mixed-chirality φ, or dimension other than 4.
SpinorPlane null_plane_from_spinor(const spinor::GammaRep& rep, const spinor::Intertwiner& pair, const Vector& phi);

struct ConjectureReport {
  bool div_free = false;       // div F = 0
  bool nondegenerate = false;  // F × F̄ ≢ 0
  bool matches = false;        // F = grad z × grad w
  PolyVField cross;            // grad z × grad w
  bool verified() const { return div_free && nondegenerate && matches; }
};

/// F, z, w on r3_coordinates() (x, y, u), flat gradient and cross product.
ConjectureReport conjecture_verify(const PolyVField& f, const Poly& z, const Poly& w);

PolyVField gradient(const Poly& f);
PolyVField cross(const PolyVField& a, const PolyVField& b);
Poly divergence(const PolyVField& f);

}  // namespace cxs::optical

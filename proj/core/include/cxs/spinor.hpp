#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cxs/clifford.hpp"
#include "cxs/cstruct.hpp"
#include "cxs/matrix.hpp"

// Dirac representations of Cl(k,l) for even k + l = 2n, chirality, and the
// intertwiners B (S → S*) and C (S → S̄).
//
// Matrix transcriptions used throughout:
//   dual pairing      <s', s> = Σ s'_a s_a        (no conjugation)
//   B:  γ_μ* = B γ_μ B⁻¹        ⇔  B γ_μ = γ_μᵀ B
//   C:  γ̄_μ = C γ_μ C⁻¹        ⇔  C γ_μ = conj(γ_μ) C
//   C̄C is conj(C)·C, B̄C = C̄*B* is conj(B)·C = conj(C)ᵀ·Bᵀ.

namespace cxs::spinor {

using clifford::Signature;

inline constexpr int kMaxRepDimension = 8;

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

struct GammaRep {
  Signature sig;
  int n = 0;                  // k + l = 2n
  std::vector<Matrix> gammas; // γ_1..γ_2n, 2ⁿ×2ⁿ
  Matrix chirality;           // γ_{2n+1} = γ_1 ⋯ γ_2n
  Scalar iota;                // 1 when η² = 1, i when η² = −1

  std::size_t spinor_dim() const { return std::size_t{1} << n; }
  /// γ(v) = Σ v^μ γ_μ.
  Matrix gamma_of(const Vector& v) const;
};

/// γ_μγ_ν + γ_νγ_μ = 2 g_μν id with g = diag(+1 × k, −1 × l).
bool check_clifford_relations(const std::vector<Matrix>& gammas, const Signature& sig);

/// Validates the relations and fills in chirality and ι. Throws std::invalid_argument on failure.
GammaRep make_rep(const Signature& sig, std::vector<Matrix> gammas);

/// Tensor-recursive construction; entries in {0, ±1, ±i}. Rejects odd or out-of-range k + l.
GammaRep build_gamma(int k, int l);

/// The explicit eight 16×16 matrices for Cl(7,1) built from Pauli tensor products.
GammaRep paper8_preset();

/// The charge conjugation matrix σ_x⊗σ_z⊗σ_y⊗σ_z belonging to paper8_preset().
Matrix paper8_charge_conjugation();

/// γ_μ ↦ iγ_μ, reordered so the new positive generators come first: a representation of (l,k).
GammaRep swap_signature(const GammaRep& rep);

struct WeylSplit {
  std::vector<Vector> plus;   // γ_{2n+1} φ = +ι φ
  std::vector<Vector> minus;  // γ_{2n+1} φ = −ι φ
};

WeylSplit weyl_split(const GammaRep& rep);

/// (−1)^{n(n−1)/2}
int b_symmetry_sign(int n);
/// (−1)^{(l−k)(l−k+2)/8}
int cc_sign(const Signature& sig);

/// Solves B γ_μ = γ_μᵀ B. Scaled so the first entry (row-major) of largest modulus is 1.
/// Throws std::domain_error when the solution space is not one-dimensional.
Matrix solve_B(const GammaRep& rep);

struct SolvedC {
  Matrix c;
  /// true when conj(C)C = ±id holds exactly after scaling
  bool normalized = false;
  /// real factor still to be applied to c when normalized is false
  double float_scale = 1.0;
  /// sign of the real scalar conj(C)C
  int square_sign = 0;
};

/// Solves C γ_μ = conj(γ_μ) C and scales C so that conj(C)C = ±id.
/// Throws std::domain_error when the solution space is not one-dimensional.
SolvedC solve_C(const GammaRep& rep);

struct Intertwiner {
  Matrix b;
  Matrix c;
  bool normalized = false;
};

/// Multiplies B by a Gaussian-rational factor so that conj(B)C = conj(C)ᵀBᵀ.
/// Throws std::domain_error if the two sides are not proportional by a unit scalar.
Intertwiner normalize_pair(const Matrix& b, const Matrix& c);

/// solve_B, solve_C and normalize_pair in one go.
Intertwiner solve_intertwiners(const GammaRep& rep);

struct Check {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct Prop1Report {
  std::vector<Check> checks;
  bool all_pass() const;
};

/// Intertwining equations for B and C, the symmetry of B, the dual and conjugate
/// behaviour of γ_{2n+1}, the sign of conj(C)C and the B/C compatibility identity.
Prop1Report prop1_audit(const GammaRep& rep, const Intertwiner& pair);

enum class Chirality { Plus, Minus, Mixed };
std::string to_string(Chirality c);

struct Spinor {
  Vector components;
  Chirality chirality = Chirality::Mixed;
};

/// Zero vectors count as Mixed.
Chirality chirality_of(const GammaRep& rep, const Vector& phi);
Spinor make_spinor(const GammaRep& rep, Vector components);

/// φ_c = C⁻¹ conj(φ).
Vector charge_conjugate(const Vector& phi, const Matrix& c);
Spinor charge_conjugate(const GammaRep& rep, const Spinor& phi, const Matrix& c);

/// Basis (2ⁿ vectors, real-linear) of S_ℝ = {φ : φ_c = φ}; nullopt unless conj(C)C = +id.
std::optional<std::vector<Vector>> majorana_basis(const GammaRep& rep, const Matrix& c);

struct MajoranaStructure {
  std::vector<Vector> basis;       // S_ℝ basis, as vectors of S
  Matrix j;                        // γ(η) in that basis, real, J² = −id
  cstruct::Split coordinates;      // W± in S_ℝ coordinates
  std::vector<Vector> w_plus;      // W₊ mapped into S
  std::vector<Vector> w_minus;     // W₋ mapped into S
  bool matches_weyl = false;       // span(W₊) = S₊ and span(W₋) = S₋
};

/// J = γ(η) on the Dirac–Majorana spinors of Cl(3+p, 1+p).
/// Throws std::invalid_argument for other signatures or when no Majorana basis exists.
MajoranaStructure majorana_complex_structure(const GammaRep& rep, const Matrix& c);

}  // namespace cxs::spinor

#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cxs/matrix.hpp"
#include "cxs/scalar.hpp"

// Exact multivector arithmetic in Cl(k,l) over an orthonormal frame e_1..e_m,
// with e_μ² = +1 for μ <= k and -1 for μ > k.

namespace cxs::clifford {

/// Sorted index subset of {1..m}, bit μ-1 set when e_μ is a factor.
using Blade = std::uint32_t;

inline constexpr int kDefaultMaxDimension = 12;

struct Signature {
  int k = 0;
  int l = 0;

  Signature() = default;
  /// Throws std::invalid_argument for negative counts or k + l > max_dim.
  Signature(int k, int l, int max_dim = kDefaultMaxDimension);

  int dim() const { return k + l; }
  /// Square of generator e_{index+1} (0-based index).
  int square(int index) const { return index < k ? 1 : -1; }
  /// Diagonal of the metric as scalars.
  Vector metric_diagonal() const;

  friend bool operator==(const Signature&, const Signature&) = default;
};

inline int grade(Blade b) { return std::popcount(b); }

/// e_A e_B = sign * e_{A xor B}: transpositions needed to merge the sorted index
/// lists, times the generator squares of the shared indices.
int blade_product_sign(const Signature& sig, Blade a, Blade b);

/// e_A ∧ e_B = sign * e_{A|B}; 0 when A and B share an index.
int blade_wedge_sign(Blade a, Blade b);

/// Blades of a grade, index lists in lexicographic order.
std::vector<Blade> blades_of_grade(int dim, int p);

/// "1" for the empty blade, otherwise e.g. "e1e3".
std::string blade_name(Blade b);

template <class Tag>
class BladeExpansion {
 public:
  using Coeffs = std::map<Blade, Scalar>;

  BladeExpansion() = default;
  explicit BladeExpansion(Signature sig) : sig_(sig) {}
  BladeExpansion(Signature sig, Coeffs coeffs) : sig_(sig) {
    for (auto& [b, c] : coeffs) add_term(b, c);
  }

  static BladeExpansion scalar(Signature sig, Scalar s) { return blade(sig, 0, std::move(s)); }
  static BladeExpansion blade(Signature sig, Blade b, Scalar s = Scalar(1)) {
    BladeExpansion e(sig);
    e.add_term(b, s);
    return e;
  }
  /// e_μ with 1-based μ.
  static BladeExpansion generator(Signature sig, int mu) {
    if (mu < 1 || mu > sig.dim()) throw std::out_of_range("generator index out of range");
    return blade(sig, Blade{1} << (mu - 1));
  }

  const Signature& signature() const { return sig_; }
  const Coeffs& coeffs() const { return coeffs_; }
  Scalar coeff(Blade b) const {
    auto it = coeffs_.find(b);
    return it == coeffs_.end() ? Scalar() : it->second;
  }
  bool is_zero() const { return coeffs_.empty(); }

  void add_term(Blade b, const Scalar& s) {
    if (sig_.dim() < 32 && (b >> sig_.dim()) != 0) throw std::out_of_range("blade outside the signature");
    if (s.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(b, s);
    if (!inserted) {
      it->second += s;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  BladeExpansion grade_part(int p) const {
    BladeExpansion out(sig_);
    for (const auto& [b, c] : coeffs_)
      if (grade(b) == p) out.coeffs_.emplace(b, c);
    return out;
  }
  bool is_even() const {
    for (const auto& [b, c] : coeffs_)
      if (grade(b) % 2 != 0) return false;
    return true;
  }
  bool is_odd() const {
    for (const auto& [b, c] : coeffs_)
      if (grade(b) % 2 == 0) return false;
    return true;
  }

  BladeExpansion& operator+=(const BladeExpansion& o) {
    check(o);
    for (const auto& [b, c] : o.coeffs_) add_term(b, c);
    return *this;
  }
  BladeExpansion& operator-=(const BladeExpansion& o) {
    check(o);
    for (const auto& [b, c] : o.coeffs_) add_term(b, -c);
    return *this;
  }
  BladeExpansion& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      coeffs_.clear();
      return *this;
    }
    for (auto& [b, c] : coeffs_) c *= s;
    return *this;
  }
  friend BladeExpansion operator+(BladeExpansion a, const BladeExpansion& b) { return a += b; }
  friend BladeExpansion operator-(BladeExpansion a, const BladeExpansion& b) { return a -= b; }
  friend BladeExpansion operator*(const Scalar& s, BladeExpansion a) { return a *= s; }
  BladeExpansion operator-() const { return Scalar(-1) * *this; }

  friend bool operator==(const BladeExpansion& a, const BladeExpansion& b) {
    return a.sig_ == b.sig_ && a.coeffs_ == b.coeffs_;
  }

  void check(const BladeExpansion& o) const {
    if (!(sig_ == o.sig_)) throw std::invalid_argument("signature mismatch");
  }

 private:
  Signature sig_;
  Coeffs coeffs_;
};

struct MultivectorTag {};
struct ExteriorTag {};

/// Element of Cl(k,l).
using Multivector = BladeExpansion<MultivectorTag>;
/// Element of ⋀V, same coefficient layout as Multivector.
using ExteriorElement = BladeExpansion<ExteriorTag>;

Multivector geometric_product(const Multivector& a, const Multivector& b);
inline Multivector operator*(const Multivector& a, const Multivector& b) { return geometric_product(a, b); }

/// η = e_1 e_2 … e_m.
Multivector volume_element(const Signature& sig);
/// (−1)^{(l−k)(l−k+1)/2}.
int eta_squared(const Signature& sig);

/// Identity on coefficients in the orthonormal frame; satisfies κ(1) = 1 and
/// κ(v a) = v ∧ κ(a) + g(v) ⌟ κ(a).
ExteriorElement kappa(const Multivector& a);
Multivector kappa_inv(const ExteriorElement& w);

ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b);
/// g(e_μ) ⌟ w, the contraction of w with the covector dual to e_μ (1-based μ).
ExteriorElement contract_generator(int mu, const ExteriorElement& w);

/// ★ω = κ(η κ⁻¹(ω)), η multiplying from the left.
ExteriorElement hodge_star(const ExteriorElement& w);

/// ★ as a matrix on the span of the given blades (columns are images).
/// Throws std::invalid_argument if ★ does not preserve the span.
Matrix hodge_matrix(const Signature& sig, const std::vector<Blade>& basis);

struct DualityStructure {
  std::vector<int> grades;    // {n} for m = 2n, {n, n+1} for m = 2n+1
  std::vector<Blade> basis;   // grade-ordered, lexicographic within a grade
  Matrix j;                   // ★ on that span, J² = −id
};

/// ★ as a complex structure on the middle degree(s) when η² = −1; nullopt otherwise.
std::optional<DualityStructure> duality_complex_structure(const Signature& sig);

std::string to_string(const Multivector& a);
std::string to_string(const ExteriorElement& w);

}  // namespace cxs::clifford

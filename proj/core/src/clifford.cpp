#include "cxs/clifford.hpp"

#include <algorithm>

#include "cxs/cstruct.hpp"

namespace cxs::clifford {

Signature::Signature(int k_, int l_, int max_dim) : k(k_), l(l_) {
  if (k < 0 || l < 0) throw std::invalid_argument("signature counts must be non-negative");
  if (k + l > max_dim)
    throw std::invalid_argument("signature dimension " + std::to_string(k + l) + " exceeds the cap " +
                                std::to_string(max_dim));
  if (k + l > 31) throw std::invalid_argument("blades are limited to 31 generators");
}

Vector Signature::metric_diagonal() const {
  Vector d(static_cast<std::size_t>(dim()));
  for (int i = 0; i < dim(); ++i) d[static_cast<std::size_t>(i)] = square(i);
  return d;
}

int blade_product_sign(const Signature& sig, Blade a, Blade b) {
  int swaps = 0;
  for (Blade t = a >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b);
  int sign = (swaps % 2 == 0) ? 1 : -1;
  for (Blade common = a & b; common != 0; common &= common - 1)
    sign *= sig.square(std::countr_zero(common));
  return sign;
}

int blade_wedge_sign(Blade a, Blade b) {
  if ((a & b) != 0) return 0;
  int swaps = 0;
  for (Blade t = a >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b);
  return (swaps % 2 == 0) ? 1 : -1;
}

std::vector<Blade> blades_of_grade(int dim, int p) {
  std::vector<Blade> out;
  if (p < 0 || p > dim) return out;
  std::vector<int> idx(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    Blade b = 0;
    for (int i : idx) b |= Blade{1} << i;
    out.push_back(b);
    int pos = p - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == dim - p + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < p; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
  return out;
}

std::string blade_name(Blade b) {
  if (b == 0) return "1";
  std::string s;
  for (int i = 0; b != 0; ++i, b >>= 1)
    if (b & 1u) s += "e" + std::to_string(i + 1);
  return s;
}

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  a.check(b);
  Multivector out(a.signature());
  for (const auto& [ba, ca] : a.coeffs())
    for (const auto& [bb, cb] : b.coeffs()) {
      Scalar c = ca * cb;
      if (blade_product_sign(a.signature(), ba, bb) < 0) c = -c;
      out.add_term(ba ^ bb, c);
    }
  return out;
}

Multivector volume_element(const Signature& sig) {
  Blade all = sig.dim() == 0 ? 0 : (Blade{1} << sig.dim()) - 1;
  return Multivector::blade(sig, all);
}

int eta_squared(const Signature& sig) {
  long d = sig.l - sig.k;
  long e = d * (d + 1) / 2;
  return (e % 2 == 0) ? 1 : -1;
}

ExteriorElement kappa(const Multivector& a) { return ExteriorElement(a.signature(), a.coeffs()); }
Multivector kappa_inv(const ExteriorElement& w) { return Multivector(w.signature(), w.coeffs()); }

ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b) {
  a.check(b);
  ExteriorElement out(a.signature());
  for (const auto& [ba, ca] : a.coeffs())
    for (const auto& [bb, cb] : b.coeffs()) {
      int s = blade_wedge_sign(ba, bb);
      if (s == 0) continue;
      Scalar c = ca * cb;
      out.add_term(ba | bb, s > 0 ? c : -c);
    }
  return out;
}

ExteriorElement contract_generator(int mu, const ExteriorElement& w) {
  const auto& sig = w.signature();
  if (mu < 1 || mu > sig.dim()) throw std::out_of_range("generator index out of range");
  const Blade bit = Blade{1} << (mu - 1);
  ExteriorElement out(sig);
  for (const auto& [b, c] : w.coeffs()) {
    if ((b & bit) == 0) continue;
    int before = std::popcount(b & (bit - 1));
    int s = (before % 2 == 0 ? 1 : -1) * sig.square(mu - 1);
    out.add_term(b ^ bit, s > 0 ? c : -c);
  }
  return out;
}

ExteriorElement hodge_star(const ExteriorElement& w) {
  return kappa(volume_element(w.signature()) * kappa_inv(w));
}

Matrix hodge_matrix(const Signature& sig, const std::vector<Blade>& basis) {
  Matrix m(basis.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    auto image = hodge_star(ExteriorElement::blade(sig, basis[c]));
    for (const auto& [b, coef] : image.coeffs()) {
      auto it = std::find(basis.begin(), basis.end(), b);
      if (it == basis.end()) throw std::invalid_argument("Hodge star leaves the given span");
      m(static_cast<std::size_t>(it - basis.begin()), c) = coef;
    }
  }
  return m;
}

std::optional<DualityStructure> duality_complex_structure(const Signature& sig) {
  if (eta_squared(sig) != -1) return std::nullopt;
  const int m = sig.dim();
  DualityStructure d;
  if (m % 2 == 0)
    d.grades = {m / 2};
  else
    d.grades = {(m - 1) / 2, (m + 1) / 2};
  for (int p : d.grades) {
    auto bs = blades_of_grade(m, p);
    d.basis.insert(d.basis.end(), bs.begin(), bs.end());
  }
  d.j = hodge_matrix(sig, d.basis);
  cstruct::ComplexStructureOp validated(d.j);
  return d;
}

namespace {

template <class Tag>
std::string expansion_string(const BladeExpansion<Tag>& a) {
  if (a.is_zero()) return "0";
  std::vector<std::pair<Blade, Scalar>> terms(a.coeffs().begin(), a.coeffs().end());
  auto order = [](Blade b) {
    std::vector<int> idx;
    for (int i = 0; b != 0; ++i, b >>= 1)
      if (b & 1u) idx.push_back(i);
    return std::make_pair(idx.size(), idx);
  };
  std::sort(terms.begin(), terms.end(), [&](const auto& x, const auto& y) { return order(x.first) < order(y.first); });
  std::string s;
  for (const auto& [b, c] : terms) {
    if (!s.empty()) s += " + ";
    std::string coef = c.is_real() ? c.str() : "(" + c.str() + ")";
    s += b == 0 ? coef : coef + "*" + blade_name(b);
  }
  return s;
}

}  // namespace

std::string to_string(const Multivector& a) { return expansion_string(a); }
std::string to_string(const ExteriorElement& w) { return expansion_string(w); }

}  // namespace cxs::clifford

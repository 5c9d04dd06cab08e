#include "cxs/spinor.hpp"

#include <cmath>
#include <stdexcept>

namespace cxs::spinor {

Matrix pauli_x() { return Matrix{{0, 1}, {1, 0}}; }
Matrix pauli_y() { return Matrix{{0, -Scalar::i()}, {Scalar::i(), 0}}; }
Matrix pauli_z() { return Matrix{{1, 0}, {0, -1}}; }

Matrix GammaRep::gamma_of(const Vector& v) const {
  if (v.size() != gammas.size()) throw std::invalid_argument("vector length does not match the representation");
  Matrix out(spinor_dim(), spinor_dim());
  for (std::size_t mu = 0; mu < v.size(); ++mu)
    if (!v[mu].is_zero()) out += v[mu] * gammas[mu];
  return out;
}

bool check_clifford_relations(const std::vector<Matrix>& gammas, const Signature& sig) {
  if (gammas.size() != static_cast<std::size_t>(sig.dim())) return false;
  for (std::size_t a = 0; a < gammas.size(); ++a)
    for (std::size_t b = a; b < gammas.size(); ++b) {
      Scalar expected = a == b ? Scalar(2 * sig.square(static_cast<int>(a))) : Scalar(0);
      if (!anticommutator(gammas[a], gammas[b]).is_scalar_multiple_of_identity(expected)) return false;
    }
  return true;
}

GammaRep make_rep(const Signature& sig, std::vector<Matrix> gammas) {
  if (sig.dim() % 2 != 0 || sig.dim() == 0)
    throw std::invalid_argument("Dirac representations need an even, positive k + l");
  GammaRep rep;
  rep.sig = sig;
  rep.n = sig.dim() / 2;
  for (const auto& g : gammas)
    if (g.rows() != rep.spinor_dim() || g.cols() != rep.spinor_dim())
      throw std::invalid_argument("gamma matrices must be 2^n x 2^n");
  if (!check_clifford_relations(gammas, sig))
    throw std::invalid_argument("gamma matrices violate the Clifford relations");
  rep.gammas = std::move(gammas);
  rep.chirality = Matrix::identity(rep.spinor_dim());
  for (const auto& g : rep.gammas) rep.chirality = rep.chirality * g;
  const int eta2 = clifford::eta_squared(sig);
  rep.iota = eta2 == 1 ? Scalar(1) : Scalar::i();
  if (!(rep.chirality * rep.chirality).is_scalar_multiple_of_identity(Scalar(eta2)))
    throw std::logic_error("chirality element does not square to eta^2");
  return rep;
}

GammaRep build_gamma(int k, int l) {
  if (k < 0 || l < 0) throw std::invalid_argument("signature counts must be non-negative");
  if ((k + l) % 2 != 0)
    throw std::invalid_argument("Cl(" + std::to_string(k) + "," + std::to_string(l) +
                                ") has odd dimension: spinor representations are built for even k + l only");
  if (k + l < 2 || k + l > kMaxRepDimension)
    throw std::invalid_argument("build_gamma supports 2 <= k + l <= " + std::to_string(kMaxRepDimension));
  const int n = (k + l) / 2;

  // Representation of Cl(n,n): pairs (σ_x, iσ_y) appended on a fresh tensor factor,
  // earlier generators padded with σ_z.
  const Matrix isy = Scalar::i() * pauli_y();
  std::vector<Matrix> plus{pauli_x()};
  std::vector<Matrix> minus{isy};
  Matrix id = Matrix::identity(2);
  for (int level = 2; level <= n; ++level) {
    for (auto& g : plus) g = kron(g, pauli_z());
    for (auto& g : minus) g = kron(g, pauli_z());
    plus.push_back(kron(id, pauli_x()));
    minus.push_back(kron(id, isy));
    id = kron(id, Matrix::identity(2));
  }

  // Multiplying by i flips the square of a generator.
  while (static_cast<int>(plus.size()) < k) {
    plus.push_back(Scalar::i() * minus.back());
    minus.pop_back();
  }
  while (static_cast<int>(plus.size()) > k) {
    minus.insert(minus.begin(), Scalar::i() * plus.back());
    plus.pop_back();
  }
  std::vector<Matrix> gammas = std::move(plus);
  gammas.insert(gammas.end(), minus.begin(), minus.end());
  return make_rep(Signature(k, l), std::move(gammas));
}

GammaRep paper8_preset() {
  const Matrix x = pauli_x(), y = pauli_y(), z = pauli_z(), id = Matrix::identity(2);
  auto t4 = [](const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    return kron(kron(kron(a, b), c), d);
  };
  std::vector<Matrix> g{
      t4(x, id, id, id),
      t4(y, y, id, id),
      t4(y, x, y, id),
      t4(y, x, x, y),
      t4(y, x, z, y),
      t4(y, z, id, y),
      t4(y, z, y, x),
      Scalar::i() * t4(y, z, y, z),
  };
  return make_rep(Signature(7, 1), std::move(g));
}

Matrix paper8_charge_conjugation() {
  return kron(kron(kron(pauli_x(), pauli_z()), pauli_y()), pauli_z());
}

GammaRep swap_signature(const GammaRep& rep) {
  std::vector<Matrix> g;
  g.reserve(rep.gammas.size());
  // the old negative generators square to +1 now and go first
  const auto k = static_cast<std::size_t>(rep.sig.k);
  for (std::size_t mu = k; mu < rep.gammas.size(); ++mu) g.push_back(Scalar::i() * rep.gammas[mu]);
  for (std::size_t mu = 0; mu < k; ++mu) g.push_back(Scalar::i() * rep.gammas[mu]);
  return make_rep(Signature(rep.sig.l, rep.sig.k), std::move(g));
}

namespace {

std::vector<Vector> eigenspace(const Matrix& m, const Scalar& lambda) {
  auto basis = nullspace(m - lambda * Matrix::identity(m.rows()));
  for (auto& v : basis) v = normalize_first_nonzero(std::move(v));
  return basis;
}

Matrix reshape(const Vector& v, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  return m;
}

void scale_largest_to_one(Matrix& m) {
  std::size_t best_r = 0, best_c = 0;
  Rational best = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Rational nrm = m(r, c).norm();
      if (nrm > best) {
        best = nrm;
        best_r = r;
        best_c = c;
      }
    }
  if (sgn(best) == 0) throw std::domain_error("intertwiner solution is zero");
  Scalar inv = Scalar(1) / m(best_r, best_c);
  m *= inv;
}

struct NonZeros {
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> by_col;  // (row, value)
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> by_row;  // (col, value)
};

NonZeros nonzeros(const Matrix& g) {
  NonZeros nz;
  nz.by_col.resize(g.cols());
  nz.by_row.resize(g.rows());
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c)
      if (!g(r, c).is_zero()) {
        nz.by_col[c].emplace_back(r, g(r, c));
        nz.by_row[r].emplace_back(c, g(r, c));
      }
  return nz;
}

// Unknown X (n×n, row-major index i*n+j) with X γ = T(γ) X, T = transpose or conjugate.
enum class Twist { Transpose, Conjugate };

Matrix solve_intertwiner(const GammaRep& rep, Twist twist, const char* name) {
  const std::size_t n = rep.spinor_dim();
  RowReducer rr(n * n);
  for (const auto& g : rep.gammas) {
    NonZeros nz = nonzeros(g);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        SparseRow row;
        for (const auto& [k, v] : nz.by_col[j]) row.emplace_back(i * n + k, v);  // (Xγ)_ij
        if (twist == Twist::Transpose) {
          for (const auto& [k, v] : nz.by_col[i]) row.emplace_back(k * n + j, -v);  // (γᵀX)_ij
        } else {
          for (const auto& [k, v] : nz.by_row[i]) row.emplace_back(k * n + j, -v.conj());  // (γ̄X)_ij
        }
        rr.add_row(std::move(row));
      }
  }
  auto kernel = rr.nullspace();
  if (kernel.size() != 1)
    throw std::domain_error(std::string(name) + ": solution space has dimension " + std::to_string(kernel.size()) +
                            " (expected 1); the representation is reducible or corrupted");
  Matrix m = reshape(kernel.front(), n);
  scale_largest_to_one(m);
  return m;
}

bool all_equal(const std::vector<Matrix>& lhs, const std::vector<Matrix>& rhs) {
  for (std::size_t i = 0; i < lhs.size(); ++i)
    if (!(lhs[i] == rhs[i])) return false;
  return true;
}

}  // namespace

WeylSplit weyl_split(const GammaRep& rep) {
  WeylSplit w{eigenspace(rep.chirality, rep.iota), eigenspace(rep.chirality, -rep.iota)};
  if (w.plus.size() * 2 != rep.spinor_dim() || w.minus.size() * 2 != rep.spinor_dim())
    throw std::logic_error("Weyl spaces must each have dimension 2^(n-1)");
  return w;
}

int b_symmetry_sign(int n) { return ((n * (n - 1) / 2) % 2 == 0) ? 1 : -1; }

int cc_sign(const Signature& sig) {
  long d = sig.l - sig.k;
  long e = d * (d + 2) / 8;
  return (e % 2 == 0) ? 1 : -1;
}

Matrix solve_B(const GammaRep& rep) { return solve_intertwiner(rep, Twist::Transpose, "solve_B"); }

SolvedC solve_C(const GammaRep& rep) {
  SolvedC out;
  out.c = solve_intertwiner(rep, Twist::Conjugate, "solve_C");
  Matrix square = out.c.conj() * out.c;
  const Scalar s = square(0, 0);
  if (!square.is_scalar_multiple_of_identity(s) || !s.is_real() || s.is_zero())
    throw std::logic_error("conj(C)C is not a nonzero real multiple of the identity");
  out.square_sign = sgn(s.re()) > 0 ? 1 : -1;
  const Rational magnitude = abs(s.re());
  if (auto root = exact_sqrt(magnitude)) {
    out.c *= Scalar(Rational(1) / *root);
    out.normalized = true;
  } else {
    out.float_scale = 1.0 / std::sqrt(magnitude.get_d());
    out.normalized = false;
  }
  return out;
}

Intertwiner normalize_pair(const Matrix& b, const Matrix& c) {
  const Matrix lhs = b.conj() * c;
  const Matrix rhs = c.conj().transpose() * b.transpose();
  std::optional<Scalar> ratio;
  for (std::size_t r = 0; r < rhs.rows() && !ratio; ++r)
    for (std::size_t col = 0; col < rhs.cols(); ++col)
      if (!rhs(r, col).is_zero()) {
        ratio = lhs(r, col) / rhs(r, col);
        break;
      }
  if (!ratio || !(lhs == *ratio * rhs))
    throw std::domain_error("conj(B)C and conj(C)^T B^T are not proportional: inconsistent intertwiners");
  const Scalar s = *ratio;
  if (s.norm() != 1) throw std::domain_error("conj(B)C / conj(C)^T B^T is not a unit scalar");
  // Scaling B by t multiplies the ratio by conj(t)/t, so t/conj(t) must equal s.
  Scalar t = s.is_one() ? Scalar(1) : (s == Scalar(-1) ? Scalar::i() : Scalar(1) + s);
  Intertwiner pair{t * b, c, true};
  if (!(pair.b.conj() * pair.c == pair.c.conj().transpose() * pair.b.transpose()))
    throw std::logic_error("normalize_pair failed to enforce conj(B)C = conj(C)^T B^T");
  return pair;
}

Intertwiner solve_intertwiners(const GammaRep& rep) {
  Matrix b = solve_B(rep);
  SolvedC c = solve_C(rep);
  Intertwiner pair = normalize_pair(b, c.c);
  pair.normalized = c.normalized;
  return pair;
}

bool Prop1Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

Prop1Report prop1_audit(const GammaRep& rep, const Intertwiner& pair) {
  Prop1Report report;
  const Matrix& b = pair.b;
  const Matrix& c = pair.c;
  const Matrix b_inv = inverse(b);
  const Matrix c_inv = inverse(c);
  const int n = rep.n;

  std::vector<Matrix> t, bt, cj, ct;
  for (const auto& g : rep.gammas) {
    t.push_back(g.transpose());
    bt.push_back(b * g * b_inv);
    cj.push_back(g.conj());
    ct.push_back(c * g * c_inv);
  }
  report.checks.push_back({"defB", all_equal(t, bt), "gamma_mu^T = B gamma_mu B^-1 for every mu"});
  report.checks.push_back({"defC", all_equal(cj, ct), "conj(gamma_mu) = C gamma_mu C^-1 for every mu"});

  const int bs = b_symmetry_sign(n);
  report.checks.push_back(
      {"B_symmetry", b.transpose() == Scalar(bs) * b, "B^T = " + std::to_string(bs) + " B"});

  const int chs = (n % 2 == 0) ? 1 : -1;
  report.checks.push_back({"chirality_dual", rep.chirality.transpose() == Scalar(chs) * (b * rep.chirality * b_inv),
                           "gamma_{2n+1}^T = " + std::to_string(chs) + " B gamma_{2n+1} B^-1"});
  report.checks.push_back({"chirality_conjugate", rep.chirality.conj() == c * rep.chirality * c_inv,
                           "conj(gamma_{2n+1}) = C gamma_{2n+1} C^-1"});

  const int ccs = cc_sign(rep.sig);
  const bool cc_ok = pair.normalized && (c.conj() * c).is_scalar_multiple_of_identity(Scalar(ccs));
  report.checks.push_back({"CC", cc_ok, "conj(C) C = " + std::to_string(ccs) + " id"});
  report.checks.push_back(
      {"BC", b.conj() * c == c.conj().transpose() * b.transpose(), "conj(B) C = conj(C)^T B^T"});
  return report;
}

std::string to_string(Chirality c) {
  switch (c) {
    case Chirality::Plus: return "+";
    case Chirality::Minus: return "-";
    case Chirality::Mixed: return "mixed";
  }
  return "?";
}

Chirality chirality_of(const GammaRep& rep, const Vector& phi) {
  if (is_zero(phi)) return Chirality::Mixed;
  Vector image = rep.chirality * phi;
  if (image == rep.iota * phi) return Chirality::Plus;
  if (image == -rep.iota * phi) return Chirality::Minus;
  return Chirality::Mixed;
}

Spinor make_spinor(const GammaRep& rep, Vector components) {
  if (components.size() != rep.spinor_dim()) throw std::invalid_argument("spinor has wrong dimension");
  Chirality ch = chirality_of(rep, components);
  return {std::move(components), ch};
}

Vector charge_conjugate(const Vector& phi, const Matrix& c) { return inverse(c) * conj(phi); }

Spinor charge_conjugate(const GammaRep& rep, const Spinor& phi, const Matrix& c) {
  return make_spinor(rep, charge_conjugate(phi.components, c));
}

std::optional<std::vector<Vector>> majorana_basis(const GammaRep& rep, const Matrix& c) {
  const std::size_t n = rep.spinor_dim();
  if (!(c.conj() * c).is_identity()) return std::nullopt;
  // φ = a + ib with conj(φ) = Cφ, C = P + iQ:  (P − 1)a − Qb = 0,  Qa + (P + 1)b = 0.
  Matrix sys(2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t col = 0; col < n; ++col) {
      Scalar p = c(r, col).re(), q = c(r, col).im();
      sys(r, col) = p - Scalar(r == col ? 1 : 0);
      sys(r, n + col) = -q;
      sys(n + r, col) = q;
      sys(n + r, n + col) = p + Scalar(r == col ? 1 : 0);
    }
  std::vector<Vector> basis;
  for (const auto& ab : nullspace(sys)) {
    Vector phi(n);
    for (std::size_t i = 0; i < n; ++i) phi[i] = Scalar(ab[i].re(), ab[n + i].re());
    basis.push_back(std::move(phi));
  }
  if (basis.size() != n) throw std::logic_error("Majorana space has the wrong real dimension");
  return basis;
}

MajoranaStructure majorana_complex_structure(const GammaRep& rep, const Matrix& c) {
  if (rep.sig.k - rep.sig.l != 2 || rep.sig.l < 1)
    throw std::invalid_argument("J = gamma(eta) on Majorana spinors needs signature (3+p, 1+p)");
  auto basis = majorana_basis(rep, c);
  if (!basis) throw std::invalid_argument("no Majorana spinors: conj(C)C != id");
  MajoranaStructure out;
  out.basis = *basis;
  const Matrix frame = Matrix::from_columns(out.basis);
  out.j = inverse(frame) * rep.chirality * frame;
  cstruct::ComplexStructureOp j(out.j);
  out.coordinates = cstruct::split_pm(j);
  for (const auto& w : out.coordinates.plus) out.w_plus.push_back(frame * w);
  for (const auto& w : out.coordinates.minus) out.w_minus.push_back(frame * w);
  WeylSplit weyl = weyl_split(rep);
  out.matches_weyl = same_span(out.w_plus, weyl.plus) && same_span(out.w_minus, weyl.minus);
  return out;
}

}  // namespace cxs::spinor

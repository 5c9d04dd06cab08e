#include "cxs/forms.hpp"

#include <bit>
#include <stdexcept>

namespace cxs::xcalc {

namespace {

void same_chart(const Coordinates& a, const Coordinates& b) {
  if (a != b) throw std::invalid_argument("objects live on different coordinate charts");
}

Blade bit(std::size_t i) { return Blade{1} << i; }

// ∂_i ⌟ dx_B = (−1)^{#indices of B before i} dx_{B∖i}.
int removal_sign(Blade b, std::size_t i) { return std::popcount(b & (bit(i) - 1)) % 2 == 0 ? 1 : -1; }

Poly as_chart_poly(const Poly& f, const Coordinates& coords) {
  if (f.coordinates() == coords) return f;
  if (f.coordinates().empty() && f.is_constant()) return Poly(coords, f.constant_term());
  throw std::invalid_argument("coefficient lives on a different coordinate chart");
}

}  // namespace

// --- PolyForm ---------------------------------------------------------------

PolyForm::PolyForm(Coordinates coords, int degree) : coords_(std::move(coords)), degree_(degree) {
  if (coords_.size() > 32) throw std::invalid_argument("at most 32 coordinates are supported");
  if (degree_ < 0) throw std::invalid_argument("form degree must be non-negative");
}

PolyForm PolyForm::function(const Poly& f) {
  PolyForm a(f.coordinates(), 0);
  a.add_term(0, f);
  return a;
}

PolyForm PolyForm::dx(const Coordinates& coords, const std::string& name) {
  PolyForm a(coords, 1);
  a.add_term(bit(Poly(coords).index_of(name)), Poly(coords, Scalar(1)));
  return a;
}

PolyForm PolyForm::exact(const Poly& f) { return d(function(f)); }

Poly PolyForm::coeff(Blade b) const {
  auto it = coeffs_.find(b);
  return it == coeffs_.end() ? Poly(coords_) : it->second;
}

void PolyForm::add_term(Blade b, const Poly& f) {
  if (clifford::grade(b) != degree_) throw std::invalid_argument("blade grade does not match the form degree");
  if (coords_.size() < 32 && (b >> coords_.size()) != 0) throw std::out_of_range("blade outside the chart");
  Poly g = as_chart_poly(f, coords_);
  if (g.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(b, g);
  if (!inserted) {
    it->second += g;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
  same_chart(coords_, o.coords_);
  if (o.is_zero()) return *this;
  if (is_zero()) degree_ = o.degree_;
  if (degree_ != o.degree_) throw std::invalid_argument("cannot add forms of different degree");
  for (const auto& [b, f] : o.coeffs_) add_term(b, f);
  return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o) { return *this += -o; }

PolyForm operator*(const Poly& f, const PolyForm& a) {
  PolyForm out(a.coords_, a.degree_);
  Poly g = as_chart_poly(f, a.coords_);
  for (const auto& [b, c] : a.coeffs_) out.add_term(b, g * c);
  return out;
}

PolyForm operator*(const Scalar& s, const PolyForm& a) {
  PolyForm out(a.coords_, a.degree_);
  for (const auto& [b, c] : a.coeffs_) out.add_term(b, s * c);
  return out;
}

bool operator==(const PolyForm& a, const PolyForm& b) {
  if (a.coords_ != b.coords_) return false;
  if (a.is_zero() && b.is_zero()) return true;
  return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
}

PolyForm PolyForm::conj() const {
  PolyForm out(coords_, degree_);
  for (const auto& [b, c] : coeffs_) out.add_term(b, c.conj());
  return out;
}

std::map<Blade, Scalar> PolyForm::evaluate(const Vector& point) const {
  std::map<Blade, Scalar> out;
  for (const auto& [b, c] : coeffs_) {
    Scalar v = c.evaluate(point);
    if (!v.is_zero()) out.emplace(b, v);
  }
  return out;
}

PolyForm PolyForm::pullback(const std::vector<Poly>& images) const {
  if (images.size() != coords_.size()) throw std::invalid_argument("one image per coordinate expected");
  Coordinates target;
  for (const auto& im : images)
    if (!im.coordinates().empty()) target = im.coordinates();
  std::vector<PolyForm> differentials;
  for (const auto& im : images) differentials.push_back(PolyForm::exact(as_chart_poly(im, target)));
  PolyForm out(target, degree_);
  for (const auto& [b, c] : coeffs_) {
    PolyForm term = PolyForm::function(as_chart_poly(c.substitute(images), target));
    for (std::size_t i = 0; i < coords_.size(); ++i)
      if (b & bit(i)) term = wedge(term, differentials[i]);
    out += term;
  }
  return out;
}

std::string PolyForm::str() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (const auto& [b, c] : coeffs_) {
    std::string basis;
    for (std::size_t i = 0; i < coords_.size(); ++i)
      if (b & bit(i)) basis += (basis.empty() ? "d" : "^d") + coords_[i];
    std::string coef = c.str();
    std::string term;
    if (basis.empty())
      term = "(" + coef + ")";
    else if (coef == "1")
      term = basis;
    else
      term = "(" + coef + ")*" + basis;
    s += (s.empty() ? "" : " + ") + term;
  }
  return s;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  same_chart(a.coordinates(), b.coordinates());
  PolyForm out(a.coordinates(), a.degree() + b.degree());
  for (const auto& [ba, ca] : a.coeffs())
    for (const auto& [bb, cb] : b.coeffs()) {
      int s = clifford::blade_wedge_sign(ba, bb);
      if (s != 0) out.add_term(ba | bb, Scalar(s) * (ca * cb));
    }
  return out;
}

PolyForm d(const PolyForm& a) {
  const Coordinates& coords = a.coordinates();
  PolyForm out(coords, a.degree() + 1);
  for (const auto& [b, f] : a.coeffs())
    for (std::size_t j = 0; j < coords.size(); ++j) {
      if (b & bit(j)) continue;
      Poly df = f.diff(j);
      if (df.is_zero()) continue;
      out.add_term(b | bit(j), Scalar(clifford::blade_wedge_sign(bit(j), b)) * df);
    }
  return out;
}

PolyForm contract(const PolyVField& v, const PolyForm& a) {
  same_chart(v.coordinates(), a.coordinates());
  if (a.degree() == 0) return PolyForm(a.coordinates(), 0);
  PolyForm out(a.coordinates(), a.degree() - 1);
  for (const auto& [b, f] : a.coeffs())
    for (std::size_t i = 0; i < a.coordinates().size(); ++i)
      if ((b & bit(i)) && !v[i].is_zero()) out.add_term(b & ~bit(i), Scalar(removal_sign(b, i)) * (v[i] * f));
  return out;
}

PolyForm lie_derivative(const PolyVField& x, const PolyForm& a) {
  PolyForm out = d(contract(x, a));
  out += contract(x, d(a));
  return out;
}

// --- PolyVField -------------------------------------------------------------

PolyVField::PolyVField(Coordinates coords) : coords_(std::move(coords)) {
  comps_.assign(coords_.size(), Poly(coords_));
}

PolyVField::PolyVField(Coordinates coords, std::vector<Poly> components) : coords_(std::move(coords)) {
  if (components.size() != coords_.size()) throw std::invalid_argument("one component per coordinate expected");
  for (auto& c : components) comps_.push_back(as_chart_poly(c, coords_));
}

PolyVField PolyVField::partial(const Coordinates& coords, const std::string& name) {
  PolyVField v(coords);
  v.comps_[Poly(coords).index_of(name)] = Poly(coords, Scalar(1));
  return v;
}

bool PolyVField::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

Poly PolyVField::apply(const Poly& f) const {
  Poly g = as_chart_poly(f, coords_);
  Poly out(coords_);
  for (std::size_t i = 0; i < comps_.size(); ++i)
    if (!comps_[i].is_zero()) out += comps_[i] * g.diff(i);
  return out;
}

PolyVField& PolyVField::operator+=(const PolyVField& o) {
  same_chart(coords_, o.coords_);
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
  return *this;
}

PolyVField& PolyVField::operator-=(const PolyVField& o) {
  same_chart(coords_, o.coords_);
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
  return *this;
}

PolyVField operator*(const Poly& f, const PolyVField& v) {
  Poly g = as_chart_poly(f, v.coords_);
  PolyVField out(v.coords_);
  for (std::size_t i = 0; i < v.comps_.size(); ++i) out.comps_[i] = g * v.comps_[i];
  return out;
}

PolyVField operator*(const Scalar& s, const PolyVField& v) {
  PolyVField out = v;
  for (auto& c : out.comps_) c *= s;
  return out;
}

bool operator==(const PolyVField& a, const PolyVField& b) { return a.coords_ == b.coords_ && a.comps_ == b.comps_; }

PolyVField PolyVField::conj() const {
  PolyVField out = *this;
  for (auto& c : out.comps_) c = c.conj();
  return out;
}

Vector PolyVField::evaluate(const Vector& point) const {
  Vector v;
  for (const auto& c : comps_) v.push_back(c.evaluate(point));
  return v;
}

std::string PolyVField::str() const {
  std::string s;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (comps_[i].is_zero()) continue;
    std::string coef = comps_[i].str();
    std::string term = coef == "1" ? "d/d" + coords_[i] : "(" + coef + ")*d/d" + coords_[i];
    s += (s.empty() ? "" : " + ") + term;
  }
  return s.empty() ? "0" : s;
}

PolyVField lie_bracket(const PolyVField& x, const PolyVField& y) {
  same_chart(x.coordinates(), y.coordinates());
  std::vector<Poly> comps;
  for (std::size_t i = 0; i < x.dim(); ++i) comps.push_back(x.apply(y[i]) - y.apply(x[i]));
  return PolyVField(x.coordinates(), std::move(comps));
}

PolyForm wedge_fields(const std::vector<PolyVField>& fields) {
  if (fields.empty()) throw std::invalid_argument("wedge of no vector fields");
  const Coordinates& coords = fields.front().coordinates();
  PolyForm out = PolyForm::function(Poly(coords, Scalar(1)));
  for (const auto& v : fields) {
    same_chart(coords, v.coordinates());
    PolyForm one(coords, 1);
    for (std::size_t i = 0; i < v.dim(); ++i) one.add_term(bit(i), v[i]);
    out = wedge(out, one);
  }
  return out;
}

bool membership_in_span(const PolyVField& v, const std::vector<PolyVField>& span) {
  if (span.size() > v.dim()) throw std::invalid_argument("span has more fields than the dimension");
  std::vector<PolyVField> fields{v};
  fields.insert(fields.end(), span.begin(), span.end());
  return wedge_fields(fields).is_zero();
}

// --- SymTensor2 -------------------------------------------------------------

SymTensor2::SymTensor2(Coordinates coords) : coords_(std::move(coords)) {
  g_.assign(coords_.size(), std::vector<Poly>(coords_.size(), Poly(coords_)));
}

SymTensor2 SymTensor2::sym(const PolyForm& alpha, const PolyForm& beta) {
  same_chart(alpha.coordinates(), beta.coordinates());
  if ((!alpha.is_zero() && alpha.degree() != 1) || (!beta.is_zero() && beta.degree() != 1))
    throw std::invalid_argument("symmetric product needs two 1-forms");
  SymTensor2 out(alpha.coordinates());
  const std::size_t n = out.dim();
  const Scalar half(make_rational(1, 2));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Poly a = alpha.coeff(bit(i)) * beta.coeff(bit(j));
      Poly b = beta.coeff(bit(i)) * alpha.coeff(bit(j));
      out.g_[i][j] = half * (a + b);
    }
  return out;
}

SymTensor2& SymTensor2::operator+=(const SymTensor2& o) {
  same_chart(coords_, o.coords_);
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) g_[i][j] += o.g_[i][j];
  return *this;
}

SymTensor2 operator*(const Poly& f, const SymTensor2& g) {
  SymTensor2 out = g;
  Poly h = as_chart_poly(f, g.coords_);
  for (auto& row : out.g_)
    for (auto& e : row) e = h * e;
  return out;
}

bool SymTensor2::is_symmetric() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (!(g_[i][j] == g_[j][i])) return false;
  return true;
}

Poly SymTensor2::operator()(const PolyVField& x, const PolyVField& y) const {
  same_chart(coords_, x.coordinates());
  same_chart(coords_, y.coordinates());
  Poly out(coords_);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      if (!y[j].is_zero() && !g_[i][j].is_zero()) out += x[i] * g_[i][j] * y[j];
  }
  return out;
}

PolyForm SymTensor2::lower(const PolyVField& x) const {
  same_chart(coords_, x.coordinates());
  PolyForm out(coords_, 1);
  for (std::size_t j = 0; j < dim(); ++j) {
    Poly c(coords_);
    for (std::size_t i = 0; i < dim(); ++i)
      if (!x[i].is_zero()) c += x[i] * g_[i][j];
    out.add_term(bit(j), c);
  }
  return out;
}

Poly SymTensor2::determinant() const {
  // Laplace expansion over bitmask minors; charts are small.
  const std::size_t n = dim();
  std::map<Blade, Poly> minors;  // columns used → det of the leading rows
  minors.emplace(0, Poly(coords_, Scalar(1)));
  for (std::size_t row = 0; row < n; ++row) {
    std::map<Blade, Poly> next;
    for (const auto& [cols, m] : minors) {
      if (m.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (cols & bit(c)) continue;
        int s = std::popcount(cols & ~(bit(c) - 1)) % 2 == 0 ? 1 : -1;  // columns to the right of c
        Poly term = Scalar(s) * (m * g_[row][c]);
        auto [it, inserted] = next.try_emplace(cols | bit(c), term);
        if (!inserted) it->second += term;
      }
    }
    minors = std::move(next);
  }
  return minors.empty() ? Poly(coords_) : minors.begin()->second;
}

Matrix SymTensor2::evaluate(const Vector& point) const {
  Matrix m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) m(i, j) = g_[i][j].evaluate(point);
  return m;
}

}  // namespace cxs::xcalc

#include "cxs/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace cxs::xcalc {

Poly::Poly(Coordinates coords, const Scalar& c) : coords_(std::move(coords)) {
  add_term(Exponents(coords_.size(), 0), c);
}

Poly Poly::variable(const Coordinates& coords, const std::string& name) {
  Poly p(coords);
  Exponents e(coords.size(), 0);
  e[p.index_of(name)] = 1;
  p.add_term(std::move(e), Scalar(1));
  return p;
}

std::size_t Poly::index_of(const std::string& name) const {
  auto it = std::find(coords_.begin(), coords_.end(), name);
  if (it == coords_.end()) throw std::invalid_argument("unknown coordinate '" + name + "'");
  return static_cast<std::size_t>(it - coords_.begin());
}

void Poly::add_term(Exponents e, const Scalar& c) {
  if (e.size() != coords_.size()) throw std::invalid_argument("exponent vector has wrong length");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

Scalar Poly::constant_term() const { return coeff(Exponents(coords_.size(), 0)); }

Scalar Poly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar() : it->second;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (unsigned x : e) s += static_cast<int>(x);
    d = std::max(d, s);
  }
  return d;
}

const Coordinates& common_coordinates(const Poly& a, const Poly& b) {
  if (a.coordinates() == b.coordinates()) return a.coordinates();
  if (a.coordinates().empty() && a.is_constant()) return b.coordinates();
  if (b.coordinates().empty() && b.is_constant()) return a.coordinates();
  throw std::invalid_argument("polynomials live on different coordinate lists");
}

namespace {

// Re-expresses a coordinate-free constant on the given coordinates.
Poly lift(const Poly& p, const Coordinates& coords) {
  if (p.coordinates() == coords) return p;
  return Poly(coords, p.constant_term());
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  const Coordinates coords = common_coordinates(*this, o);
  if (coords_ != coords) *this = lift(*this, coords);
  for (const auto& [e, c] : lift(o, coords).terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  const Coordinates coords = common_coordinates(*this, o);
  if (coords_ != coords) *this = lift(*this, coords);
  for (const auto& [e, c] : lift(o, coords).terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  const Coordinates& coords = common_coordinates(a, b);
  const Poly la = lift(a, coords), lb = lift(b, coords);
  Poly out(coords);
  for (const auto& [ea, ca] : la.terms_)
    for (const auto& [eb, cb] : lb.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(std::move(e), ca * cb);
    }
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.coords_ == b.coords_) return a.terms_ == b.terms_;
  if (a.is_constant() && b.is_constant() && (a.coords_.empty() || b.coords_.empty()))
    return a.constant_term() == b.constant_term();
  return false;
}

Poly Poly::pow(unsigned k) const {
  Poly out(coords_, Scalar(1));
  Poly base = *this;
  while (k > 0) {
    if (k & 1u) out = out * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return out;
}

Poly Poly::conj() const {
  Poly out(coords_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c.conj());
  return out;
}

Poly Poly::diff(std::size_t var) const {
  if (var >= coords_.size()) throw std::out_of_range("coordinate index out of range");
  Poly out(coords_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents f = e;
    --f[var];
    out.add_term(std::move(f), c * Scalar(static_cast<long>(e[var])));
  }
  return out;
}

Scalar Poly::evaluate(const Vector& point) const {
  if (point.size() != coords_.size()) throw std::invalid_argument("evaluation point has wrong length");
  Scalar sum;
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
    sum += t;
  }
  return sum;
}

std::complex<double> Poly::evaluate(const std::vector<double>& point) const {
  if (point.size() != coords_.size()) throw std::invalid_argument("evaluation point has wrong length");
  std::complex<double> sum = 0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> t = c.to_complex();
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
    sum += t;
  }
  return sum;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (images.size() != coords_.size()) throw std::invalid_argument("one image per coordinate expected");
  Coordinates target;
  for (const auto& im : images)
    if (!im.coordinates().empty()) {
      if (!target.empty() && target != im.coordinates())
        throw std::invalid_argument("substitution images use different coordinates");
      target = im.coordinates();
    }
  Poly out(target);
  for (const auto& [e, c] : terms_) {
    Poly t(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t = t * lift(images[i], target).pow(e[i]);
    out += t;
  }
  return out;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  // Highest total degree first reads more naturally.
  std::vector<std::pair<Exponents, Scalar>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    unsigned da = 0, db = 0;
    for (unsigned x : a.first) da += x;
    for (unsigned x : b.first) db += x;
    return da > db;
  });
  for (const auto& [e, c] : sorted) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += coords_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string coef;
    bool negative = false;
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      Rational mag = abs(c.re());
      coef = (mag == 1 && !mono.empty()) ? "" : to_string(mag);
    } else if (sgn(c.re()) == 0) {
      negative = sgn(c.im()) < 0;
      Rational mag = abs(c.im());
      coef = (mag == 1 ? std::string() : to_string(mag) + "*") + "i";
    } else {
      coef = "(" + c.str() + ")";
    }
    std::string term = coef.empty() ? mono : (mono.empty() ? coef : coef + "*" + mono);
    if (s.empty())
      s = negative ? "-" + term : term;
    else
      s += (negative ? " - " : " + ") + term;
  }
  return s;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Coordinates& coords) : text_(text), coords_(coords) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly p = term();
    for (;;) {
      if (eat('+'))
        p += term();
      else if (eat('-'))
        p -= term();
      else
        return p;
    }
  }

  Poly term() {
    Poly p = unary();
    for (;;) {
      if (eat('*')) {
        p = p * unary();
      } else if (eat('/')) {
        Poly q = unary();
        if (!q.is_constant() || q.is_zero()) fail("division by a non-constant or zero");
        p *= Scalar(1) / q.constant_term();
      } else {
        return p;
      }
    }
  }

  Poly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a non-negative integer");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Poly primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) fail("missing ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Rational q(std::string(text_.substr(start, pos_ - start)));
      return Poly(coords_, Scalar(q));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name == "i") return Poly(coords_, Scalar::i());
      if (std::find(coords_.begin(), coords_.end(), name) == coords_.end()) {
        pos_ = start;
        fail("unknown coordinate '" + name + "'");
      }
      return Poly::variable(coords_, name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const Coordinates& coords_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const Coordinates& coords) { return Parser(text, coords).parse(); }

std::pair<Poly, Poly> wirtinger(const Poly& f, const std::string& x, const std::string& y) {
  const Poly fx = f.diff(x);
  const Poly fy = f.diff(y);
  const Scalar half(make_rational(1, 2));
  const Scalar half_i(Rational(0), make_rational(1, 2));
  return {half * fx - half_i * fy, half * fx + half_i * fy};
}

Poly complex_coordinate(const Coordinates& coords, const std::string& x, const std::string& y) {
  return Poly::variable(coords, x) + Scalar::i() * Poly::variable(coords, y);
}

Poly complex_conjugate_coordinate(const Coordinates& coords, const std::string& x, const std::string& y) {
  return Poly::variable(coords, x) - Scalar::i() * Poly::variable(coords, y);
}

}  // namespace cxs::xcalc

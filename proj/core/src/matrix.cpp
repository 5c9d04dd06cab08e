#include "cxs/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace cxs {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const Vector& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) {
  if (cols.empty()) return {};
  Matrix m(cols.front().size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != m.rows_) throw std::invalid_argument("columns of unequal length");
    for (std::size_t r = 0; r < m.rows_; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::conj() const {
  Matrix m = *this;
  for (auto& x : m.data_) x = x.conj();
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x.is_zero(); });
}

bool Matrix::is_real() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x.is_real(); });
}

bool Matrix::is_identity() const { return is_scalar_multiple_of_identity(Scalar(1)); }

bool Matrix::is_scalar_multiple_of_identity(const Scalar& s) const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& x = (*this)(r, c);
      if (r == c ? !(x == s) : !x.is_zero()) return false;
    }
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& x : m.data_) x = -x;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in *");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        out(i, j) += aik * bkj;
      }
    }
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("matrix/vector shape mismatch");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero() || v[k].is_zero()) continue;
      out[i] += a(i, k) * v[k];
    }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }
Matrix anticommutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) throw std::domain_error("matrix is singular");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    Scalar p = a(col, col);
    if (!p.is_one())
      for (std::size_t j = 0; j < n; ++j) {
        a(col, j) /= p;
        inv(col, j) /= p;
      }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      Scalar f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(col, j).is_zero()) a(r, j) -= f * a(col, j);
        if (!inv(col, j).is_zero()) inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::vector<Vector> nullspace(const Matrix& m) {
  RowReducer rr(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) rr.add_dense_row(m.row(r));
  return rr.nullspace();
}

std::size_t rank(const Matrix& m) {
  RowReducer rr(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) rr.add_dense_row(m.row(r));
  return rr.rank();
}

// --- vectors ----------------------------------------------------------------

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector out(v);
  for (auto& x : out) x *= s;
  return out;
}

Vector conj(const Vector& v) {
  Vector out(v);
  for (auto& x : out) x = x.conj();
  return out;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

Vector normalize_first_nonzero(Vector v) {
  auto it = std::find_if(v.begin(), v.end(), [](const Scalar& x) { return !x.is_zero(); });
  if (it == v.end() || it->is_one()) return v;
  Scalar lead = *it;
  for (auto& x : v) x /= lead;
  return v;
}

std::size_t span_rank(const std::vector<Vector>& vs) {
  if (vs.empty()) return 0;
  RowReducer rr(vs.front().size());
  for (const auto& v : vs) rr.add_dense_row(v);
  return rr.rank();
}

bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b) {
  std::vector<Vector> both(a);
  both.insert(both.end(), b.begin(), b.end());
  std::size_t r = span_rank(both);
  return r == span_rank(a) && r == span_rank(b);
}

std::vector<Vector> intersect_spans(const std::vector<Vector>& a, const std::vector<Vector>& b) {
  if (a.empty() || b.empty()) return {};
  // Solve sum x_i a_i - sum y_j b_j = 0; the intersection is spanned by sum x_i a_i.
  const std::size_t dim = a.front().size();
  std::vector<Vector> cols(a);
  for (const auto& v : b) cols.push_back(Scalar(-1) * v);
  Matrix sys = Matrix::from_columns(cols);
  std::vector<Vector> out;
  for (const auto& coeffs : nullspace(sys)) {
    Vector w(dim);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!coeffs[i].is_zero()) w = w + coeffs[i] * a[i];
    if (!is_zero(w)) out.push_back(std::move(w));
  }
  // Drop dependent vectors so the result is a basis.
  std::vector<Vector> basis;
  for (auto& w : out) {
    basis.push_back(w);
    if (span_rank(basis) < basis.size()) basis.pop_back();
  }
  for (auto& w : basis) w = normalize_first_nonzero(std::move(w));
  return basis;
}

// --- sparse elimination -------------------------------------------------------

namespace {

void canonicalize(SparseRow& row, std::size_t unknowns) {
  for (const auto& [c, v] : row)
    if (c >= unknowns) throw std::out_of_range("sparse row column out of range");
  std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseRow out;
  out.reserve(row.size());
  for (auto& e : row) {
    if (!out.empty() && out.back().first == e.first)
      out.back().second += e.second;
    else
      out.push_back(std::move(e));
  }
  std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
  row = std::move(out);
}

// row - f * pivot, both sorted by column.
SparseRow axpy(const SparseRow& row, const Scalar& f, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -(f * pivot[j].second));
      ++j;
    } else {
      Scalar v = row[i].second - f * pivot[j].second;
      if (!v.is_zero()) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

const Scalar* find_entry(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

}  // namespace

void RowReducer::add_row(SparseRow row) {
  canonicalize(row, unknowns_);
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) break;
    Scalar f = row.front().second;
    row = axpy(row, f, it->second);
  }
  if (row.empty()) return;
  Scalar lead = row.front().second;
  if (!lead.is_one())
    for (auto& e : row) e.second /= lead;
  std::size_t col = row.front().first;
  pivots_.emplace(col, std::move(row));
}

void RowReducer::add_dense_row(const Vector& row) {
  if (row.size() != unknowns_) throw std::invalid_argument("dense row has wrong length");
  SparseRow sparse;
  for (std::size_t c = 0; c < row.size(); ++c)
    if (!row[c].is_zero()) sparse.emplace_back(c, row[c]);
  add_row(std::move(sparse));
}

std::vector<Vector> RowReducer::nullspace() const {
  std::map<std::size_t, SparseRow> rref = pivots_;
  for (auto p = rref.rbegin(); p != rref.rend(); ++p) {
    const std::size_t col = p->first;
    for (auto q = rref.begin(); q != rref.end() && q->first < col; ++q) {
      const Scalar* e = find_entry(q->second, col);
      if (e == nullptr) continue;
      Scalar f = *e;
      q->second = axpy(q->second, f, p->second);
    }
  }
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < unknowns_; ++free) {
    if (rref.count(free) != 0) continue;
    Vector v(unknowns_);
    v[free] = 1;
    for (const auto& [col, row] : rref) {
      if (col > free) break;
      if (const Scalar* e = find_entry(row, free)) v[col] = -*e;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r == 0 ? "[[" : " [");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << (r + 1 == m.rows() ? "]]" : "]\n");
  }
  return os;
}

}  // namespace cxs

#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

#include "cxs/scalar.hpp"

namespace cxs {

using Vector = std::vector<Scalar>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vector& d);
  static Matrix from_columns(const std::vector<Vector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;

  Matrix transpose() const;
  Matrix conj() const;
  Matrix adjoint() const { return transpose().conj(); }

  bool is_zero() const;
  bool is_real() const;
  bool is_identity() const;
  /// True when this equals s * identity.
  bool is_scalar_multiple_of_identity(const Scalar& s) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  Matrix operator-() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix commutator(const Matrix& a, const Matrix& b);
Matrix anticommutator(const Matrix& a, const Matrix& b);

/// Exact inverse by Gauss-Jordan elimination; throws std::domain_error if singular.
Matrix inverse(const Matrix& m);

/// Basis of the right kernel, one vector per free column of the reduced row echelon form.
std::vector<Vector> nullspace(const Matrix& m);
std::size_t rank(const Matrix& m);

// --- vector helpers ---------------------------------------------------------

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);
Vector conj(const Vector& v);
bool is_zero(const Vector& v);
/// Bilinear sum a_i b_i (no conjugation).
Scalar dot(const Vector& a, const Vector& b);
/// Divides by the first nonzero entry so that it becomes 1. Zero vectors are left alone.
Vector normalize_first_nonzero(Vector v);
/// Rank of the matrix whose columns are the given vectors.
std::size_t span_rank(const std::vector<Vector>& vs);
/// True when span(a) == span(b) as complex subspaces.
bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b);
/// Basis of span(a) ∩ span(b).
std::vector<Vector> intersect_spans(const std::vector<Vector>& a, const std::vector<Vector>& b);

// --- sparse elimination -----------------------------------------------------

using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

/// Incremental row reduction for large, sparse homogeneous systems. Rows are
/// fed one at a time and reduced against the current pivots; nullspace()
/// finishes the back substitution.
class RowReducer {
 public:
  explicit RowReducer(std::size_t unknowns) : unknowns_(unknowns) {}

  /// Entries with column >= unknowns throw std::out_of_range. Duplicate columns are summed.
  void add_row(SparseRow row);
  void add_dense_row(const Vector& row);

  std::size_t unknowns() const { return unknowns_; }
  std::size_t rank() const { return pivots_.size(); }
  std::vector<Vector> nullspace() const;

 private:
  std::size_t unknowns_;
  std::map<std::size_t, SparseRow> pivots_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace cxs

#pragma once

#include <utility>
#include <vector>

#include "cxs/matrix.hpp"

// Complex structures on real scalar-product spaces.
//
// Convention: a real space W with complex structure J is made complex by
// declaring i*w = J(w). W₊ is the +i eigenspace of J on ℂ⊗W, W₋ the -i one.

namespace cxs::cstruct {

/// Real vector space with a symmetric, non-degenerate bilinear form g.
class RealQuadraticSpace {
 public:
  /// Throws std::invalid_argument unless g is a real, symmetric, invertible square matrix.
  explicit RealQuadraticSpace(Matrix g);

  static RealQuadraticSpace euclidean(std::size_t dim);

  std::size_t dim() const { return g_.rows(); }
  const Matrix& g() const { return g_; }
  /// Complex-bilinear extension g_ℂ(v, w) = vᵀ g w.
  Scalar operator()(const Vector& v, const Vector& w) const;

 private:
  Matrix g_;
};

/// A real linear map with J·J = -id.
class ComplexStructureOp {
 public:
  /// Throws std::invalid_argument unless J is real, square and squares to -id.
  explicit ComplexStructureOp(Matrix j);

  std::size_t dim() const { return j_.rows(); }
  const Matrix& matrix() const { return j_; }

 private:
  Matrix j_;
};

struct Split {
  std::vector<Vector> plus;   // J w = +i w
  std::vector<Vector> minus;  // J w = -i w
};

/// Eigenbases of J on the complexification, each vector scaled so its first nonzero entry is 1.
Split split_pm(const ComplexStructureOp& j);

/// Jᵀ g J == g.
bool is_orthogonal(const ComplexStructureOp& j, const RealQuadraticSpace& space);

/// g_ℂ(v, w) == 0 for every pair (including v == w) of the given vectors.
bool totally_null_check(const std::vector<Vector>& basis, const RealQuadraticSpace& space);

/// h(w1, w2) = g(w1, w2) + i g(J w1, w2) for real vectors w1, w2.
/// Throws std::invalid_argument when J is not orthogonal for g or the vectors are not real.
Scalar hermitian_form(const RealQuadraticSpace& space, const ComplexStructureOp& j, const Vector& w1,
                      const Vector& w2);

}  // namespace cxs::cstruct

#include "cxs/cstruct.hpp"

#include <algorithm>
#include <stdexcept>

namespace cxs::cstruct {

RealQuadraticSpace::RealQuadraticSpace(Matrix g) : g_(std::move(g)) {
  if (!g_.is_square() || g_.rows() == 0) throw std::invalid_argument("scalar product must be a non-empty square matrix");
  if (!g_.is_real()) throw std::invalid_argument("scalar product must be real");
  if (!(g_.transpose() == g_)) throw std::invalid_argument("scalar product must be symmetric");
  if (rank(g_) != g_.rows()) throw std::invalid_argument("scalar product is degenerate");
}

RealQuadraticSpace RealQuadraticSpace::euclidean(std::size_t dim) {
  return RealQuadraticSpace(Matrix::identity(dim));
}

Scalar RealQuadraticSpace::operator()(const Vector& v, const Vector& w) const { return dot(v, g_ * w); }

ComplexStructureOp::ComplexStructureOp(Matrix j) : j_(std::move(j)) {
  if (!j_.is_square() || j_.rows() == 0) throw std::invalid_argument("complex structure must be a non-empty square matrix");
  if (!j_.is_real()) throw std::invalid_argument("complex structure must be a real map");
  if (!(j_ * j_).is_scalar_multiple_of_identity(Scalar(-1)))
    throw std::invalid_argument("J*J != -id: not a complex structure");
}

Split split_pm(const ComplexStructureOp& j) {
  const std::size_t n = j.dim();
  auto eigenbasis = [&](const Scalar& lambda) {
    Matrix shifted = j.matrix() - lambda * Matrix::identity(n);
    auto basis = nullspace(shifted);
    for (auto& v : basis) v = normalize_first_nonzero(std::move(v));
    return basis;
  };
  Split s{eigenbasis(Scalar::i()), eigenbasis(-Scalar::i())};
  if (s.plus.size() * 2 != n || s.minus.size() * 2 != n)
    throw std::logic_error("eigenspaces of a complex structure must be half-dimensional");
  return s;
}

bool is_orthogonal(const ComplexStructureOp& j, const RealQuadraticSpace& space) {
  if (j.dim() != space.dim()) throw std::invalid_argument("dimension mismatch between J and g");
  return j.matrix().transpose() * space.g() * j.matrix() == space.g();
}

bool totally_null_check(const std::vector<Vector>& basis, const RealQuadraticSpace& space) {
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a; b < basis.size(); ++b)
      if (!space(basis[a], basis[b]).is_zero()) return false;
  return true;
}

Scalar hermitian_form(const RealQuadraticSpace& space, const ComplexStructureOp& j, const Vector& w1,
                      const Vector& w2) {
  if (!is_orthogonal(j, space)) throw std::invalid_argument("J is not orthogonal for g");
  auto real = [](const Vector& v) { return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_real(); }); };
  if (!real(w1) || !real(w2)) throw std::invalid_argument("hermitian_form takes vectors of the real space W");
  return space(w1, w2) + Scalar::i() * space(j.matrix() * w1, w2);
}

}  // namespace cxs::cstruct

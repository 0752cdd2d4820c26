#include "qwt/linalg.hpp"

#include <stdexcept>
#include <string>

namespace qwt {

CVector matvec(const CMatrix& m, const CVector& v) {
  if (m.cols() != v.size()) {
    throw std::invalid_argument("matvec: matrix has " +
                                std::to_string(m.cols()) +
                                " columns but vector has dimension " +
                                std::to_string(v.size()));
  }
  return m * v;
}

Real unitarity_defect(const CMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("unitarity_defect: matrix is not square");
  }
  const CMatrix g = m.adjoint() * m - CMatrix::Identity(m.cols(), m.cols());
  return g.cwiseAbs().maxCoeff();
}

Complex det(const CMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("det: matrix is not square");
  }
  if (m.rows() > 8) {
    throw std::invalid_argument("det: dimension " + std::to_string(m.rows()) +
                                " exceeds the small-matrix limit of 8");
  }
  return m.determinant();
}

Real projection_residual(const std::vector<CVector>& basis, const CVector& v) {
  for (const auto& b : basis) {
    if (b.size() != v.size()) {
      throw std::invalid_argument(
          "projection_residual: basis/vector dimension mismatch");
    }
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      const Complex g = basis[i].dot(basis[j]);
      const Real expected = (i == j) ? 1.0 : 0.0;
      if (std::abs(g - expected) > kOrthoTol) {
        throw std::invalid_argument(
            "projection_residual: basis is not orthonormal");
      }
    }
  }
  CVector r = v;
  for (const auto& b : basis) {
    r -= b * b.dot(v);
  }
  return r.norm();
}

}  // namespace qwt

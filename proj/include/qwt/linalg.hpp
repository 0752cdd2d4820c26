#pragma once

#include <vector>

#include "qwt/types.hpp"

namespace qwt {

/// Dimension-checked matrix-vector product.
CVector matvec(const CMatrix& m, const CVector& v);

/// Max-norm of m^dagger * m - I. Zero for a unitary matrix.
Real unitarity_defect(const CMatrix& m);

/// Determinant of a small (<= 8x8) square matrix via partial-pivot LU.
Complex det(const CMatrix& m);

/// Norm of the component of v outside span(basis). The basis must be
/// orthonormal within kOrthoTol.
Real projection_residual(const std::vector<CVector>& basis, const CVector& v);

}  // namespace qwt

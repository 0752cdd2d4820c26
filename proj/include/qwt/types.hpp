#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace qwt {

using Real = double;
using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

// Tolerance tiers. Orthonormality of constructed bases sits at rounding
// noise, subspace-closure and reduced-vs-full comparisons accumulate a few
// orders of magnitude on top, and closed-form spectral identities get the
// loosest tier.
inline constexpr Real kOrthoTol = 1e-12;
inline constexpr Real kClosureTol = 1e-10;
inline constexpr Real kFormulaTol = 1e-8;

/// Eigenpairs of an effective evolution operator, in alpha-basis coordinates.
/// Column k of `vectors` belongs to the eigenvalue exp(i * phases[k]).
/// Ordering: phase 0 first, then conjugate pairs (+w, -w) by increasing w.
struct SpectralData {
  std::vector<Real> phases;
  CMatrix vectors;
  Real delta = 0.0;  ///< radical entering the szegedy eigenphases; 0 elsewhere

  Complex eigenvalue(int k) const {
    return {std::cos(phases.at(k)), std::sin(phases.at(k))};
  }
};

}  // namespace qwt

#pragma once

#include <vector>

#include "qwt/types.hpp"

namespace qwt {

/// Coined discrete-time walk on the star graph: N external vertices labelled
/// 1..N around a central vertex, with Grover diffusion at the centre and a
/// pi phase shift at the two marked external vertices (sender, receiver).
///
/// State layout (dimension 2N): entries 0..N-1 are the external-vertex states
/// |j,0>, entries N..2N-1 are the central states |0,j> with coin j. The walk
/// is bipartite across that boundary.
struct StarModel {
  int n = 0;
  int sender = 0;
  int receiver = 0;

  StarModel(int n, int sender, int receiver);
};

int star_dim(const StarModel& m);

/// Eigenphase omega = arccos((N-4)/N) of the two-step effective operator.
Real star_omega(const StarModel& m);

CVector star_initial(const StarModel& m);  ///< |s,0>
CVector star_target(const StarModel& m);   ///< |r,0>

/// One step U = S*C applied in O(N) without materializing the 2N x 2N matrix.
CVector star_step(const StarModel& m, const CVector& state);

/// The three orthonormal vectors spanning the U^2-invariant subspace,
/// embedded in the full 2N-dimensional space.
std::vector<CVector> star_alpha_basis(const StarModel& m);

/// 3x3 effective operator in the alpha basis; one application is two steps.
CMatrix star_effective(const StarModel& m);

/// Analytic eigenpairs {1, e^{+-i omega}} of the effective operator.
SpectralData star_spectrum(const StarModel& m);

/// Closed-form transfer fidelity after t walk steps. Zero at odd t (the walk
/// is bipartite), sin^4(omega*k/2) at t = 2k.
Real star_fidelity_analytic(const StarModel& m, int t);

/// Step count at which the fidelity first peaks: the closest integer to
/// 2*pi/omega, moved to the analytically better even neighbour when odd.
int star_transfer_time(const StarModel& m);

}  // namespace qwt

#pragma once

#include <vector>

#include "qwt/types.hpp"

namespace qwt {

/// Coined walk on the complete graph of N vertices with a self-loop on each
/// vertex. Grover coin on every vertex, extra pi phase at the two marked
/// vertices. State layout (dimension N^2): |i,j> -> (i-1)*N + (j-1),
/// row-major in (position i, coin j).
struct CompleteLoopModel {
  int n = 0;
  int sender = 0;
  int receiver = 0;

  CompleteLoopModel(int n, int sender, int receiver);
};

int cl_dim(const CompleteLoopModel& m);

/// Same eigenphase arccos((N-4)/N) as the star walk.
Real cl_omega(const CompleteLoopModel& m);

CVector cl_initial(const CompleteLoopModel& m);  ///< |s> (x) |psi_S>
CVector cl_target(const CompleteLoopModel& m);   ///< |r> (x) |psi_S>

/// One step U = S*C in O(N^2): per-row Grover diffusion, global sign flip on
/// the marked rows, then the (i,j) <-> (j,i) swap.
CVector cl_step(const CompleteLoopModel& m, const CVector& state);

/// The five orthonormal vectors spanning the U^2-invariant subspace, embedded
/// in the full space. Verifies orthonormality and closure numerically and
/// throws on internal inconsistency.
std::vector<CVector> cl_alpha_basis(const CompleteLoopModel& m);

/// The eigenvalue-1 vector dropped when the six-vector intermediate basis is
/// reduced to five. Orthogonal to the initial and target states.
CVector cl_removed_eigenvector(const CompleteLoopModel& m);

/// 5x5 effective operator in the alpha basis; one application is two steps.
CMatrix cl_effective(const CompleteLoopModel& m);

/// Analytic eigenpairs {1, e^{+-i omega}, e^{+-2i omega}}. The doubled pair
/// is what makes the transfer exact for every N.
SpectralData cl_spectrum(const CompleteLoopModel& m);

/// cos^2(omega*k) * sin^4(omega*k/2) at t = 2k; reported as 0 at odd t, where
/// the reduced description does not apply.
Real cl_fidelity_analytic(const CompleteLoopModel& m, int t);

/// Same policy as the star walk: closest integer to 2*pi/omega, moved to the
/// better even neighbour when odd.
int cl_transfer_time(const CompleteLoopModel& m);

}  // namespace qwt

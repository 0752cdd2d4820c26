#pragma once

#include <vector>

#include "qwt/types.hpp"

namespace qwt {

/// Szegedy walk with queries on the complete graph: the bipartite duplication
/// space H_N (x) H_N with the uniform stochastic matrix p_ij = (1-d_ij)/(N-1),
/// driven by U = R_B * R_A * R_M per step. State layout (dimension N^2):
/// |i,j> -> (i-1)*N + (j-1), i in the original graph, j in the copy. Diagonal
/// states |i,i> carry no weight in the Phi/Psi vectors (p_ii = 0) but belong
/// to the space; the reflections negate them.
struct SzegedyModel {
  int n = 0;
  int sender = 0;
  int receiver = 0;

  SzegedyModel(int n, int sender, int receiver);
};

int sz_dim(const SzegedyModel& m);

/// Query reflection R_M: pi phase on states whose first register is marked.
CVector sz_query(const SzegedyModel& m, const CVector& state);

/// Reflection R_A about span{Phi_i}: per row, reflect about the uniform
/// off-diagonal superposition; diagonal entries are negated.
CVector sz_reflect_rows(const SzegedyModel& m, const CVector& state);

/// Reflection R_B about span{Psi_j}: the same per column.
CVector sz_reflect_cols(const SzegedyModel& m, const CVector& state);

/// One step U = R_B * R_A * R_M in O(N^2), matrix-free.
CVector sz_step(const SzegedyModel& m, const CVector& state);

CVector sz_initial(const SzegedyModel& m);  ///< Phi_s
CVector sz_target(const SzegedyModel& m);   ///< Phi_r

/// The seven orthonormal vectors spanning the U-invariant subspace, embedded
/// in the full space. Verifies orthonormality and one-step closure and throws
/// on internal inconsistency.
std::vector<CVector> sz_alpha_basis(const SzegedyModel& m);

/// 7x7 effective operator in the alpha basis; one application is one step.
CMatrix sz_effective(const SzegedyModel& m);

/// Radical sqrt(N^4 - 10N^3 + 35N^2 - 50N + 33) entering the eigenphases.
Real sz_delta(const SzegedyModel& m);

/// Fundamental eigenphase omega_1 = arccos((4 - N + delta)/(N-1)^2).
Real sz_omega1(const SzegedyModel& m);

/// All seven eigenpairs. The phases {0, w1, w2, w3} come from the factorized
/// characteristic equation; the fixed-point eigenvector is in closed form and
/// the remaining six are computed by inverse iteration on the 7x7 operator.
SpectralData sz_eigenphases(const SzegedyModel& m);

/// Large-N approximation sin^4(omega_1 * t / 2) of the transfer fidelity;
/// the simulated value differs by O(N^{-1/2}).
Real sz_fidelity_analytic(const SzegedyModel& m, int t);

/// Closest integer to pi/omega_1 (no parity constraint).
int sz_transfer_time(const SzegedyModel& m);

}  // namespace qwt

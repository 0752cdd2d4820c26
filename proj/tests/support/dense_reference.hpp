#pragma once

// Dense reference operators assembled from the primitive definitions (step
// and coin factors, reflection products). They provide an independent route
// against which the matrix-free implementations are checked; keep any change
// here decoupled from the library's step functions.

#include <random>

#include "qwt/complete_loops.hpp"
#include "qwt/star.hpp"
#include "qwt/szegedy.hpp"

namespace qwt::test {

inline CMatrix dense_star_unitary(const StarModel& m) {
  const int n = m.n;
  const int d = 2 * n;
  CMatrix s = CMatrix::Zero(d, d);
  for (int j = 0; j < n; ++j) {
    s(j, n + j) = 1.0;  // |j,0><0,j|
    s(n + j, j) = 1.0;  // |0,j><j,0|
  }
  CMatrix c = CMatrix::Zero(d, d);
  for (int j = 0; j < n; ++j) {
    c(j, j) = (j == m.sender - 1 || j == m.receiver - 1) ? -1.0 : 1.0;
  }
  // Grover coin on the centre block
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      c(n + i, n + j) = 2.0 / n - (i == j ? 1.0 : 0.0);
    }
  }
  return s * c;
}

inline CMatrix dense_cl_unitary(const CompleteLoopModel& m) {
  const int n = m.n;
  const int d = n * n;
  const auto idx = [n](int i, int j) { return i * n + j; };
  CMatrix c = CMatrix::Zero(d, d);
  for (int i = 0; i < n; ++i) {
    const Real phase = (i == m.sender - 1 || i == m.receiver - 1) ? -1.0 : 1.0;
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        c(idx(i, j), idx(i, k)) = phase * (2.0 / n - (j == k ? 1.0 : 0.0));
      }
    }
  }
  CMatrix s = CMatrix::Zero(d, d);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      s(idx(j, i), idx(i, j)) = 1.0;
    }
  }
  return s * c;
}

inline CMatrix dense_szegedy_unitary(const SzegedyModel& m) {
  const int n = m.n;
  const int d = n * n;
  const auto idx = [n](int i, int j) { return i * n + j; };
  CMatrix ra = -CMatrix::Identity(d, d);
  CMatrix rb = -CMatrix::Identity(d, d);
  for (int i = 0; i < n; ++i) {
    CVector phi = CVector::Zero(d);
    CVector psi = CVector::Zero(d);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      phi(idx(i, j)) = 1.0 / std::sqrt(n - 1.0);
      psi(idx(j, i)) = 1.0 / std::sqrt(n - 1.0);
    }
    ra += 2.0 * phi * phi.adjoint();
    rb += 2.0 * psi * psi.adjoint();
  }
  CMatrix rm = CMatrix::Identity(d, d);
  for (int j = 0; j < n; ++j) {
    rm(idx(m.sender - 1, j), idx(m.sender - 1, j)) = -1.0;
    rm(idx(m.receiver - 1, j), idx(m.receiver - 1, j)) = -1.0;
  }
  return rb * ra * rm;
}

inline CVector random_state(int dim, std::mt19937_64& rng) {
  std::normal_distribution<Real> gauss(0.0, 1.0);
  CVector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  v.normalize();
  return v;
}

inline CMatrix random_unitary(int dim, std::mt19937_64& rng) {
  std::normal_distribution<Real> gauss(0.0, 1.0);
  CMatrix a(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) a(i, j) = Complex(gauss(rng), gauss(rng));
  }
  return Eigen::HouseholderQR<CMatrix>(a).householderQ();
}

}  // namespace qwt::test

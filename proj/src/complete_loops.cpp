#include "qwt/complete_loops.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qwt/linalg.hpp"
#include "transfer_policy.hpp"

namespace qwt {

namespace {

using RowMat =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

void check_dim(const CompleteLoopModel& m, const CVector& v) {
  if (v.size() != cl_dim(m)) {
    throw std::invalid_argument("complete-loops: state has dimension " +
                                std::to_string(v.size()) + ", expected " +
                                std::to_string(cl_dim(m)));
  }
}

// The four vectors completing the initial and target states to the
// six-dimensional intermediate invariant set, before the eigenvalue-1
// direction is removed.
std::array<CVector, 4> intermediate_basis(const CompleteLoopModel& m) {
  const int n = m.n;
  const int s = m.sender - 1;
  const int r = m.receiver - 1;
  const auto idx = [n](int i, int j) { return i * n + j; };

  CVector a3p = CVector::Zero(n * n);
  CVector a4p = CVector::Zero(n * n);
  const Real w3 = 1.0 / std::sqrt(2.0 * (n - 2));
  const Real w4 = 1.0 / (n - 2.0);
  for (int i = 0; i < n; ++i) {
    if (i == s || i == r) continue;
    a3p(idx(i, s)) = w3;
    a3p(idx(i, r)) = w3;
    for (int j = 0; j < n; ++j) {
      if (j != s && j != r) a4p(idx(i, j)) = w4;
    }
  }

  const Real lead = std::sqrt(2.0 / (n - 2.0));
  const Real tail = std::sqrt(n / (2.0 * (n - 2.0)));
  CVector a5p = lead * cl_initial(m);
  a5p(idx(s, s)) -= tail;
  a5p(idx(s, r)) -= tail;
  CVector a6p = lead * cl_target(m);
  a6p(idx(r, s)) -= tail;
  a6p(idx(r, r)) -= tail;

  return {a3p, a4p, a5p, a6p};
}

}  // namespace

CompleteLoopModel::CompleteLoopModel(int n_, int sender_, int receiver_)
    : n(n_), sender(sender_), receiver(receiver_) {
  if (n < 5) {
    throw std::invalid_argument(
        "complete-loops model: n must be at least 5 (got " +
        std::to_string(n) + ")");
  }
  if (sender < 1 || sender > n || receiver < 1 || receiver > n) {
    throw std::invalid_argument(
        "complete-loops model: marked vertices must lie in 1.." +
        std::to_string(n));
  }
  if (sender == receiver) {
    throw std::invalid_argument(
        "complete-loops model: sender and receiver must differ");
  }
}

int cl_dim(const CompleteLoopModel& m) { return m.n * m.n; }

Real cl_omega(const CompleteLoopModel& m) {
  return std::acos((m.n - 4.0) / m.n);
}

CVector cl_initial(const CompleteLoopModel& m) {
  CVector v = CVector::Zero(cl_dim(m));
  v.segment((m.sender - 1) * m.n, m.n).setConstant(1.0 / std::sqrt(m.n));
  return v;
}

CVector cl_target(const CompleteLoopModel& m) {
  CVector v = CVector::Zero(cl_dim(m));
  v.segment((m.receiver - 1) * m.n, m.n).setConstant(1.0 / std::sqrt(m.n));
  return v;
}

CVector cl_step(const CompleteLoopModel& m, const CVector& state) {
  check_dim(m, state);
  const int n = m.n;
  Eigen::Map<const RowMat> in(state.data(), n, n);
  CVector result(n * n);
  Eigen::Map<RowMat> out(result.data(), n, n);
  // Grover coin per position row, marked-row sign flip, then the swap S;
  // writing the updated row straight into the matching column fuses the
  // coin and swap passes.
  for (int i = 0; i < n; ++i) {
    const Complex mean = in.row(i).mean();
    const Real sign = (i == m.sender - 1 || i == m.receiver - 1) ? -1.0 : 1.0;
    out.col(i) = sign * (CVector::Constant(n, 2.0 * mean) -
                         in.row(i).transpose());
  }
  return result;
}

std::vector<CVector> cl_alpha_basis(const CompleteLoopModel& m) {
  const int n = m.n;
  const auto [a3p, a4p, a5p, a6p] = intermediate_basis(m);

  const Real s2 = std::sqrt(2.0);
  CVector a3 = std::sqrt((n - 2.0) / n) * a3p - std::sqrt(2.0 / n) * a4p;
  CVector a4 = (a5p - a6p) / s2;
  CVector a5 = a3p / std::sqrt(Real(n)) +
               std::sqrt((n - 2.0) / (2.0 * n)) * a4p - 0.5 * a5p - 0.5 * a6p;

  std::vector<CVector> basis = {cl_initial(m), cl_target(m), a3, a4, a5};

  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      const Complex g = basis[i].dot(basis[j]);
      const Real expected = (i == j) ? 1.0 : 0.0;
      if (std::abs(g - expected) > kOrthoTol) {
        throw std::runtime_error(
            "cl_alpha_basis: constructed basis failed the orthonormality "
            "check");
      }
    }
  }
  for (const auto& b : basis) {
    const CVector u2b = cl_step(m, cl_step(m, b));
    if (projection_residual(basis, u2b) > kClosureTol) {
      throw std::runtime_error(
          "cl_alpha_basis: constructed basis failed the closure check");
    }
  }
  return basis;
}

CVector cl_removed_eigenvector(const CompleteLoopModel& m) {
  const auto [a3p, a4p, a5p, a6p] = intermediate_basis(m);
  return a3p / std::sqrt(Real(m.n)) +
         std::sqrt((m.n - 2.0) / (2.0 * m.n)) * a4p + 0.5 * a5p + 0.5 * a6p;
}

CMatrix cl_effective(const CompleteLoopModel& m) {
  const Real n = m.n;
  const Real n2 = n * n;
  const Real s2 = std::sqrt(2.0);
  const Real rq = std::sqrt(n - 2.0);
  const Real a = (n - 4.0) * (n - 2.0) / n2;
  const Real b = -2.0 * (n - 4.0) / n2;
  const Real c = 4.0 * s2 * (n - 2.0) / n2;
  const Real d = 2.0 * rq / n;
  const Real e = 2.0 * s2 * (n - 4.0) * rq / n2;
  const Real f = (n - 4.0) * (n - 4.0) / n2;
  const Real g = 4.0 * (n - 4.0) * rq / n2;
  const Real h = (n - 4.0) / n;
  const Real k = (n2 - 16.0 * n + 32.0) / n2;
  CMatrix u(5, 5);
  u <<  a,  b, c, -d,  e,
        b,  a, c,  d,  e,
        c,  c, f,  0, -g,
        d, -d, 0,  h,  0,
       -e, -e, g,  0,  k;
  return u;
}

SpectralData cl_spectrum(const CompleteLoopModel& m) {
  const Real w = cl_omega(m);
  const Real s2 = 1.0 / std::sqrt(2.0);
  const Real q = 1.0 / (2.0 * std::sqrt(2.0));
  SpectralData sd;
  sd.phases = {0.0, w, -w, 2.0 * w, -2.0 * w};
  sd.vectors = CMatrix::Zero(5, 5);
  sd.vectors.col(0) << 0.5, 0.5, s2, 0.0, 0.0;
  sd.vectors.col(1) << 0.5, -0.5, 0.0, Complex(0.0, -s2), 0.0;
  sd.vectors.col(2) << 0.5, -0.5, 0.0, Complex(0.0, s2), 0.0;
  sd.vectors.col(3) << q, q, -0.5, 0.0, Complex(0.0, s2);
  sd.vectors.col(4) << q, q, -0.5, 0.0, Complex(0.0, -s2);
  return sd;
}

Real cl_fidelity_analytic(const CompleteLoopModel& m, int t) {
  if (t < 0) {
    throw std::invalid_argument("cl_fidelity_analytic: negative step count");
  }
  if (t % 2 != 0) {
    return 0.0;
  }
  const int k = t / 2;
  const Real w = cl_omega(m);
  const Real c = std::cos(w * k);
  const Real s = std::sin(w * k / 2.0);
  return c * c * s * s * s * s;
}

int cl_transfer_time(const CompleteLoopModel& m) {
  return detail::even_transfer_time(
      cl_omega(m), [&](int t) { return cl_fidelity_analytic(m, t); });
}

}  // namespace qwt

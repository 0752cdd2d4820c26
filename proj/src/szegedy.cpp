#include "qwt/szegedy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qwt/linalg.hpp"

namespace qwt {

namespace {

using RowMat =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MatMap = Eigen::Map<RowMat>;

void check_dim(const SzegedyModel& m, const CVector& v) {
  if (v.size() != sz_dim(m)) {
    throw std::invalid_argument("szegedy: state has dimension " +
                                std::to_string(v.size()) + ", expected " +
                                std::to_string(sz_dim(m)));
  }
}

void query_inplace(const SzegedyModel& m, MatMap a) {
  a.row(m.sender - 1) = -a.row(m.sender - 1);
  a.row(m.receiver - 1) = -a.row(m.receiver - 1);
}

// Reflection about Phi_i within each row: the diagonal entry has no overlap
// with Phi_i (p_ii = 0) and is simply negated.
void reflect_rows_inplace(int n, MatMap a) {
  for (int i = 0; i < n; ++i) {
    const Complex diag = a(i, i);
    const Complex mean = (a.row(i).sum() - diag) / Real(n - 1);
    a.row(i) = CVector::Constant(n, 2.0 * mean).transpose() - a.row(i);
    a(i, i) = -diag;
  }
}

void reflect_cols_inplace(int n, MatMap a) {
  for (int j = 0; j < n; ++j) {
    const Complex diag = a(j, j);
    const Complex mean = (a.col(j).sum() - diag) / Real(n - 1);
    a.col(j) = CVector::Constant(n, 2.0 * mean) - a.col(j);
    a(j, j) = -diag;
  }
}

// Inverse iteration at an analytically known eigenvalue of the small
// effective operator. A relative detuning of 1e-12 keeps the factorization
// away from exact singularity without biasing the converged direction.
CVector inverse_iterate(const CMatrix& u, Complex lambda) {
  const auto d = u.rows();
  const CMatrix shifted =
      u - (lambda * (1.0 + 1e-12)) * CMatrix::Identity(d, d);
  const Eigen::PartialPivLU<CMatrix> lu(shifted);
  CVector x = CVector::Constant(d, 1.0 / std::sqrt(Real(d)));
  for (int it = 0; it < 3; ++it) {
    x = lu.solve(x);
    x.normalize();
  }
  return x;
}

}  // namespace

SzegedyModel::SzegedyModel(int n_, int sender_, int receiver_)
    : n(n_), sender(sender_), receiver(receiver_) {
  if (n < 5) {
    throw std::invalid_argument("szegedy model: n must be at least 5 (got " +
                                std::to_string(n) + ")");
  }
  if (sender < 1 || sender > n || receiver < 1 || receiver > n) {
    throw std::invalid_argument(
        "szegedy model: marked vertices must lie in 1.." + std::to_string(n));
  }
  if (sender == receiver) {
    throw std::invalid_argument(
        "szegedy model: sender and receiver must differ");
  }
}

int sz_dim(const SzegedyModel& m) { return m.n * m.n; }

CVector sz_query(const SzegedyModel& m, const CVector& state) {
  check_dim(m, state);
  CVector out = state;
  query_inplace(m, MatMap(out.data(), m.n, m.n));
  return out;
}

CVector sz_reflect_rows(const SzegedyModel& m, const CVector& state) {
  check_dim(m, state);
  CVector out = state;
  reflect_rows_inplace(m.n, MatMap(out.data(), m.n, m.n));
  return out;
}

CVector sz_reflect_cols(const SzegedyModel& m, const CVector& state) {
  check_dim(m, state);
  CVector out = state;
  reflect_cols_inplace(m.n, MatMap(out.data(), m.n, m.n));
  return out;
}

CVector sz_step(const SzegedyModel& m, const CVector& state) {
  check_dim(m, state);
  CVector out = state;
  MatMap a(out.data(), m.n, m.n);
  query_inplace(m, a);
  reflect_rows_inplace(m.n, a);
  reflect_cols_inplace(m.n, a);
  return out;
}

CVector sz_initial(const SzegedyModel& m) {
  CVector v = CVector::Zero(sz_dim(m));
  const Real w = 1.0 / std::sqrt(m.n - 1.0);
  for (int j = 0; j < m.n; ++j) {
    if (j != m.sender - 1) v((m.sender - 1) * m.n + j) = w;
  }
  return v;
}

CVector sz_target(const SzegedyModel& m) {
  CVector v = CVector::Zero(sz_dim(m));
  const Real w = 1.0 / std::sqrt(m.n - 1.0);
  for (int j = 0; j < m.n; ++j) {
    if (j != m.receiver - 1) v((m.receiver - 1) * m.n + j) = w;
  }
  return v;
}

std::vector<CVector> sz_alpha_basis(const SzegedyModel& m) {
  const int n = m.n;
  const int s = m.sender - 1;
  const int r = m.receiver - 1;
  const auto idx = [n](int i, int j) { return i * n + j; };
  const int d = n * n;

  CVector a3 = CVector::Zero(d);
  const Real w3 = 1.0 / std::sqrt((n - 2.0) * (n - 3.0));
  for (int i = 0; i < n; ++i) {
    if (i == s || i == r) continue;
    for (int j = 0; j < n; ++j) {
      if (j == s || j == r || j == i) continue;
      a3(idx(i, j)) = w3;
    }
  }

  CVector a4 = CVector::Zero(d);
  CVector a5 = CVector::Zero(d);
  const Real lead = 1.0 / std::sqrt((n - 1.0) * (n - 2.0));
  const Real tail = std::sqrt((n - 2.0) / (n - 1.0));
  for (int j = 0; j < n; ++j) {
    if (j == s || j == r) continue;
    a4(idx(s, j)) = lead;
    a5(idx(r, j)) = lead;
  }
  a4(idx(s, r)) = -tail;
  a5(idx(r, s)) = -tail;

  CVector a6 = CVector::Zero(d);
  CVector a7 = CVector::Zero(d);
  const Real w6 = 1.0 / std::sqrt(n - 2.0);
  for (int i = 0; i < n; ++i) {
    if (i == s || i == r) continue;
    a6(idx(i, s)) = w6;
    a7(idx(i, r)) = w6;
  }

  std::vector<CVector> basis = {sz_initial(m), sz_target(m), a3, a4,
                                a5,            a6,           a7};

  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      const Complex g = basis[i].dot(basis[j]);
      const Real expected = (i == j) ? 1.0 : 0.0;
      if (std::abs(g - expected) > kOrthoTol) {
        throw std::runtime_error(
            "sz_alpha_basis: constructed basis failed the orthonormality "
            "check");
      }
    }
  }
  for (const auto& b : basis) {
    if (projection_residual(basis, sz_step(m, b)) > kClosureTol) {
      throw std::runtime_error(
          "sz_alpha_basis: constructed basis failed the closure check");
    }
  }
  return basis;
}

CMatrix sz_effective(const SzegedyModel& m) {
  const Real n = m.n;
  const Real q1 = n - 1.0;
  const Real q2 = n - 2.0;
  const Real q3 = n - 3.0;
  const Real q5 = n - 5.0;
  const Real r1 = std::sqrt(q1);
  const Real r2 = std::sqrt(q2);
  const Real r3 = std::sqrt(q3);
  const Real q1sq = q1 * q1;
  const Real p32 = q1 * r1;        // (N-1)^{3/2}
  const Real p52 = q1sq * r1;      // (N-1)^{5/2}

  CMatrix u(7, 7);
  u(0, 0) = q3 / q1;
  u(0, 1) = -2.0 * q2 / q1sq;
  u(0, 2) = 2.0 * q3 * r3 * r2 / p52;
  u(0, 3) = 0.0;
  u(0, 4) = 2.0 * r2 / q1sq;
  u(0, 5) = 4.0 * q2 * r2 / p52;
  u(0, 6) = 2.0 * q3 * r2 / p52;

  u(1, 0) = u(0, 1);
  u(1, 1) = u(0, 0);
  u(1, 2) = u(0, 2);
  u(1, 3) = u(0, 4);
  u(1, 4) = 0.0;
  u(1, 5) = u(0, 6);
  u(1, 6) = u(0, 5);

  u(2, 0) = -2.0 * r3 * r2 / p32;
  u(2, 1) = u(2, 0);
  u(2, 2) = q5 * q5 / q1sq;
  u(2, 3) = 2.0 * r3 / p32;
  u(2, 4) = u(2, 3);
  u(2, 5) = 2.0 * q5 * r3 / q1sq;
  u(2, 6) = u(2, 5);

  u(3, 0) = 0.0;
  u(3, 1) = -2.0 * r2 / q1sq;
  u(3, 2) = -2.0 * r3 * (n + 1.0) / p52;
  u(3, 3) = -q3 / q1;
  u(3, 4) = 2.0 / q1sq;
  u(3, 5) = -4.0 / p52;
  u(3, 6) = 2.0 * q3 * n / p52;

  u(4, 0) = u(3, 1);
  u(4, 1) = 0.0;
  u(4, 2) = u(3, 2);
  u(4, 3) = u(3, 4);
  u(4, 4) = u(3, 3);
  u(4, 5) = u(3, 6);
  u(4, 6) = u(3, 5);

  u(5, 0) = 0.0;
  u(5, 1) = -2.0 * r2 / p32;
  u(5, 2) = 2.0 * q3 * r3 / q1sq;
  u(5, 3) = 0.0;
  u(5, 4) = -2.0 * q2 / p32;
  u(5, 5) = -q3 * q3 / q1sq;
  u(5, 6) = 2.0 * q3 / q1sq;

  u(6, 0) = u(5, 1);
  u(6, 1) = 0.0;
  u(6, 2) = u(5, 2);
  u(6, 3) = u(5, 4);
  u(6, 4) = 0.0;
  u(6, 5) = u(5, 6);
  u(6, 6) = u(5, 5);

  return u;
}

Real sz_delta(const SzegedyModel& m) {
  const Real n = m.n;
  return std::sqrt(n * n * n * n - 10.0 * n * n * n + 35.0 * n * n -
                   50.0 * n + 33.0);
}

Real sz_omega1(const SzegedyModel& m) {
  const Real q1 = m.n - 1.0;
  return std::acos((4.0 - m.n + sz_delta(m)) / (q1 * q1));
}

SpectralData sz_eigenphases(const SzegedyModel& m) {
  const Real n = m.n;
  const Real q1 = n - 1.0;
  const Real delta = sz_delta(m);
  const Real w1 = sz_omega1(m);
  const Real w2 = std::acos((4.0 - n - delta) / (q1 * q1));
  const Real w3 = std::acos((4.0 * n - n * n - 5.0) / (q1 * q1));

  SpectralData sd;
  sd.delta = delta;
  sd.phases = {0.0, w1, -w1, w2, -w2, w3, -w3};
  sd.vectors = CMatrix::Zero(7, 7);

  // The fixed point is known in closed form.
  const Real q = n * (n - 3.0);
  const Real c1 = std::sqrt((q + 2.0) / (q + 3.0)) / std::sqrt(2.0);
  const Real c2 = 1.0 / std::sqrt(2.0 * (q + 3.0));
  sd.vectors(0, 0) = c1;
  sd.vectors(1, 0) = -c1;
  sd.vectors(5, 0) = c2;
  sd.vectors(6, 0) = -c2;

  const CMatrix u = sz_effective(m);
  for (int k = 1; k < 7; ++k) {
    sd.vectors.col(k) = inverse_iterate(u, sd.eigenvalue(k));
  }
  return sd;
}

Real sz_fidelity_analytic(const SzegedyModel& m, int t) {
  if (t < 0) {
    throw std::invalid_argument("sz_fidelity_analytic: negative step count");
  }
  const Real s = std::sin(sz_omega1(m) * t / 2.0);
  return s * s * s * s;
}

int sz_transfer_time(const SzegedyModel& m) {
  return static_cast<int>(std::lround(std::numbers::pi / sz_omega1(m)));
}

}  // namespace qwt

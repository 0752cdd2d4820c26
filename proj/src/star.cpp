#include "qwt/star.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "transfer_policy.hpp"

namespace qwt {

namespace {

void check_dim(const StarModel& m, const CVector& v) {
  if (v.size() != star_dim(m)) {
    throw std::invalid_argument("star: state has dimension " +
                                std::to_string(v.size()) + ", expected " +
                                std::to_string(star_dim(m)));
  }
}

}  // namespace

StarModel::StarModel(int n_, int sender_, int receiver_)
    : n(n_), sender(sender_), receiver(receiver_) {
  if (n < 3) {
    throw std::invalid_argument(
        "star model: n must be at least 3 (got " + std::to_string(n) + ")");
  }
  if (sender < 1 || sender > n || receiver < 1 || receiver > n) {
    throw std::invalid_argument("star model: marked vertices must lie in 1.." +
                                std::to_string(n));
  }
  if (sender == receiver) {
    throw std::invalid_argument("star model: sender and receiver must differ");
  }
}

int star_dim(const StarModel& m) { return 2 * m.n; }

Real star_omega(const StarModel& m) {
  return std::acos((m.n - 4.0) / m.n);
}

CVector star_initial(const StarModel& m) {
  CVector v = CVector::Zero(star_dim(m));
  v(m.sender - 1) = 1.0;
  return v;
}

CVector star_target(const StarModel& m) {
  CVector v = CVector::Zero(star_dim(m));
  v(m.receiver - 1) = 1.0;
  return v;
}

CVector star_step(const StarModel& m, const CVector& state) {
  check_dim(m, state);
  const int n = m.n;
  const auto external = state.head(n);
  const auto central = state.tail(n);

  CVector out(2 * n);
  // Central amplitudes diffuse back to the external vertices: 2/N times the
  // coin total, minus the matching coin amplitude.
  const Complex total = central.sum();
  out.head(n).setConstant((2.0 / n) * total);
  out.head(n) -= central;
  // External amplitudes hop to the centre, picking up the marked-vertex phase.
  out.tail(n) = external;
  out(n + m.sender - 1) = -external(m.sender - 1);
  out(n + m.receiver - 1) = -external(m.receiver - 1);
  return out;
}

std::vector<CVector> star_alpha_basis(const StarModel& m) {
  const int d = star_dim(m);
  CVector a3 = CVector::Zero(d);
  const Real w = 1.0 / std::sqrt(m.n - 2.0);
  for (int j = 1; j <= m.n; ++j) {
    if (j != m.sender && j != m.receiver) {
      a3(j - 1) = w;
    }
  }
  return {star_initial(m), star_target(m), a3};
}

CMatrix star_effective(const StarModel& m) {
  const Real n = m.n;
  const Real c = 1.0 - 2.0 / n;
  const Real o = -2.0 / n;
  const Real g = 2.0 * std::sqrt(n - 2.0) / n;
  const Real e = 1.0 - 4.0 / n;
  CMatrix u(3, 3);
  u << c, o, g,
       o, c, g,
      -g, -g, e;
  return u;
}

SpectralData star_spectrum(const StarModel& m) {
  const Real w = star_omega(m);
  const Real s2 = 1.0 / std::sqrt(2.0);
  SpectralData sd;
  sd.phases = {0.0, w, -w};
  sd.vectors = CMatrix::Zero(3, 3);
  sd.vectors.col(0) << s2, -s2, 0.0;
  sd.vectors.col(1) << 0.5, 0.5, Complex(0.0, s2);
  sd.vectors.col(2) << 0.5, 0.5, Complex(0.0, -s2);
  return sd;
}

Real star_fidelity_analytic(const StarModel& m, int t) {
  if (t < 0) {
    throw std::invalid_argument("star_fidelity_analytic: negative step count");
  }
  if (t % 2 != 0) {
    return 0.0;
  }
  const int k = t / 2;
  const Real s = std::sin(star_omega(m) * k / 2.0);
  return s * s * s * s;
}

int star_transfer_time(const StarModel& m) {
  return detail::even_transfer_time(
      star_omega(m), [&](int t) { return star_fidelity_analytic(m, t); });
}

}  // namespace qwt

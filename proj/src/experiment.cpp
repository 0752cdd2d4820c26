#include "qwt/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "qwt/linalg.hpp"
#include "qwt/szegedy.hpp"

namespace qwt {

namespace {

CVector random_state(int dim, std::mt19937_64& rng) {
  std::normal_distribution<Real> gauss(0.0, 1.0);
  CVector v(dim);
  for (int i = 0; i < dim; ++i) {
    v(i) = Complex(gauss(rng), gauss(rng));
  }
  v.normalize();
  return v;
}

const std::vector<Real>& peak_series(const TransferReport& rep) {
  if (!rep.fidelity_full.empty()) return rep.fidelity_full;
  if (!rep.fidelity_reduced.empty()) return rep.fidelity_reduced;
  return rep.fidelity_analytic;
}

}  // namespace

TransferReport run_transfer(const WalkModel& m, int steps,
                            Representations repr) {
  validate(m);
  if (steps < 0) {
    throw std::invalid_argument("run_transfer: negative step count");
  }
  if (!repr.full && !repr.reduced && !repr.analytic) {
    throw std::invalid_argument(
        "run_transfer: at least one representation must be requested");
  }

  TransferReport rep;
  rep.model = m;
  rep.steps = steps;
  rep.predicted_T = transfer_time(m);

  if (repr.full) {
    rep.fidelity_full.reserve(steps + 1);
    const CVector target = target_state(m);
    CVector psi = initial_state(m);
    rep.fidelity_full.push_back(std::norm(target.dot(psi)));
    for (int t = 1; t <= steps; ++t) {
      psi = step(m, psi);
      rep.fidelity_full.push_back(std::norm(target.dot(psi)));
    }
  }

  if (repr.reduced) {
    const CMatrix ueff = effective_operator(m);
    const int stride = reduced_stride(m);
    CVector coords = CVector::Zero(ueff.cols());
    coords(0) = 1.0;  // the initial state is the first alpha vector
    rep.fidelity_reduced.reserve(steps + 1);
    rep.fidelity_reduced.push_back(std::norm(coords(1)));
    for (int t = 1; t <= steps; ++t) {
      if (t % stride == 0) {
        coords = ueff * coords;
        rep.fidelity_reduced.push_back(std::norm(coords(1)));
      } else {
        rep.fidelity_reduced.push_back(0.0);
      }
    }
  }

  if (repr.analytic) {
    rep.fidelity_analytic.reserve(steps + 1);
    for (int t = 0; t <= steps; ++t) {
      rep.fidelity_analytic.push_back(fidelity_analytic(m, t));
    }
  }

  const auto& series = peak_series(rep);
  const auto it = std::max_element(series.begin(), series.end());
  rep.peak_step = static_cast<int>(it - series.begin());
  rep.peak_fidelity = *it;
  return rep;
}

Real cross_check(const WalkModel& m, int steps) {
  const TransferReport rep = run_transfer(m, steps, {true, true, false});
  const int stride = reduced_stride(m);
  Real worst = 0.0;
  for (int t = 0; t <= steps; t += stride) {
    worst = std::max(worst,
                     std::abs(rep.fidelity_full[t] - rep.fidelity_reduced[t]));
  }
  return worst;
}

SweepReport sweep(Family family, const std::vector<int>& n_values, int sender,
                  int receiver) {
  int previous = 0;
  for (int n : n_values) {
    try {
      validate(WalkModel{family, n, sender, receiver});
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("sweep: invalid n = " + std::to_string(n) +
                                  " (" + e.what() + ")");
    }
    if (n <= previous) {
      throw std::invalid_argument(
          "sweep: n values must be strictly increasing (offending n = " +
          std::to_string(n) + ")");
    }
    previous = n;
  }

  SweepReport out;
  out.family = family;
  out.sender = sender;
  out.receiver = receiver;
  out.points.reserve(n_values.size());
  for (int n : n_values) {
    const WalkModel m{family, n, sender, receiver};
    const int predicted = transfer_time(m);
    const TransferReport rep =
        run_transfer(m, 2 * predicted, {true, false, false});
    out.points.push_back({n, predicted, rep.peak_step, rep.peak_fidelity});
  }
  return out;
}

std::vector<CheckResult> run_verification(const WalkModel& m,
                                          unsigned long seed) {
  validate(m);
  std::vector<CheckResult> results;
  const auto add = [&results](std::string name, Real measured, Real bound) {
    results.push_back({std::move(name), measured <= bound, measured, bound});
  };

  std::mt19937_64 rng(seed);
  const int d = dim(m);
  const int stride = reduced_stride(m);
  const int predicted = transfer_time(m);

  {
    Real worst = 0.0;
    for (int k = 0; k < 25; ++k) {
      const CVector v = random_state(d, rng);
      worst = std::max(worst, std::abs(step(m, v).norm() - 1.0));
    }
    add("norm-conservation", worst, 1e-12);
  }

  const auto basis = alpha_basis(m);
  {
    Real worst = 0.0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = i; j < basis.size(); ++j) {
        const Real expected = (i == j) ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(basis[i].dot(basis[j]) - expected));
      }
    }
    add("alpha-orthonormality", worst, kOrthoTol);
  }

  {
    Real worst = 0.0;
    for (const auto& b : basis) {
      CVector image = b;
      for (int k = 0; k < stride; ++k) image = step(m, image);
      worst = std::max(worst, projection_residual(basis, image));
    }
    add("subspace-closure", worst,
        m.family == Family::Star ? kOrthoTol : kClosureTol);
  }

  const CMatrix ueff = effective_operator(m);
  add("effective-unitarity", unitarity_defect(ueff), kOrthoTol);

  {
    const auto k = static_cast<int>(basis.size());
    CMatrix gram(k, k);
    for (int j = 0; j < k; ++j) {
      CVector image = basis[j];
      for (int a = 0; a < stride; ++a) image = step(m, image);
      for (int i = 0; i < k; ++i) gram(i, j) = basis[i].dot(image);
    }
    add("effective-vs-gram", (ueff - gram).cwiseAbs().maxCoeff(), kClosureTol);
  }

  const SpectralData sd = spectrum(m);
  if (m.family == Family::Szegedy) {
    Real worst_det = 0.0;
    for (std::size_t k = 0; k < sd.phases.size(); ++k) {
      const CMatrix shifted =
          ueff - sd.eigenvalue(static_cast<int>(k)) *
                     CMatrix::Identity(ueff.rows(), ueff.cols());
      worst_det = std::max(worst_det, std::abs(det(shifted)));
    }
    add("characteristic-roots", worst_det, kFormulaTol);
    add("fixed-point-eigenvector",
        (matvec(ueff, sd.vectors.col(0)) - sd.vectors.col(0)).norm(),
        kOrthoTol);
    Real worst = 0.0;
    for (int k = 1; k < 7; ++k) {
      worst = std::max(worst, (matvec(ueff, sd.vectors.col(k)) -
                               sd.eigenvalue(k) * sd.vectors.col(k))
                                  .norm());
    }
    add("eigenvector-residuals", worst, kClosureTol);

    SzegedyModel sm(m.n, m.sender, m.receiver);
    Real worst_inv = 0.0;
    for (int k = 0; k < 10; ++k) {
      const CVector v = random_state(d, rng);
      worst_inv = std::max(worst_inv,
                           (sz_query(sm, sz_query(sm, v)) - v).norm());
      worst_inv = std::max(
          worst_inv, (sz_reflect_rows(sm, sz_reflect_rows(sm, v)) - v).norm());
      worst_inv = std::max(
          worst_inv, (sz_reflect_cols(sm, sz_reflect_cols(sm, v)) - v).norm());
    }
    add("reflector-involutions", worst_inv, 1e-12);
  } else {
    Real worst = 0.0;
    for (std::size_t k = 0; k < sd.phases.size(); ++k) {
      const int ki = static_cast<int>(k);
      worst = std::max(worst, (matvec(ueff, sd.vectors.col(ki)) -
                               sd.eigenvalue(ki) * sd.vectors.col(ki))
                                  .norm());
    }
    add("spectral-relations", worst, kOrthoTol);
  }

  if (m.family == Family::Star) {
    // Amplitude must sit on the external half at even steps and on the
    // centre half at odd steps, with exact zeros elsewhere.
    CVector psi = initial_state(m);
    Real worst = 0.0;
    for (int t = 1; t <= 2 * predicted; ++t) {
      psi = step(m, psi);
      const auto external = psi.head(m.n);
      const auto central = psi.tail(m.n);
      worst = std::max(worst, (t % 2 == 0)
                                  ? central.cwiseAbs().maxCoeff()
                                  : external.cwiseAbs().maxCoeff());
    }
    add("bipartite-parity", worst, 0.0);
  }

  add("full-vs-reduced", cross_check(m, 3 * predicted), kClosureTol);

  {
    const TransferReport rep =
        run_transfer(m, 3 * predicted, {true, false, true});
    Real worst = 0.0;
    for (int t = 0; t <= rep.steps; t += stride) {
      worst = std::max(worst, std::abs(rep.fidelity_full[t] -
                                       rep.fidelity_analytic[t]));
    }
    if (m.family == Family::Szegedy) {
      add("sim-vs-analytic", worst, 5.0 / std::sqrt(Real(m.n)));
    } else {
      add("sim-vs-analytic", worst, kClosureTol);
    }
  }

  {
    const TransferReport rep =
        run_transfer(m, 2 * predicted, {true, false, false});
    add("peak-vs-prediction", std::abs(rep.peak_step - predicted), 1.0);
  }

  return results;
}

}  // namespace qwt

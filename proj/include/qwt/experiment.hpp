#pragma once

#include <string>
#include <vector>

#include "qwt/walk_model.hpp"

namespace qwt {

struct Representations {
  bool full = true;
  bool reduced = true;
  bool analytic = true;
};

/// Fidelity time series of one transfer run. Representation vectors are
/// either empty (not requested) or of length steps + 1, including t = 0.
/// For the coined walks the reduced series is 0 at odd steps, where the
/// two-step reduction has no value to offer.
struct TransferReport {
  WalkModel model;
  int steps = 0;
  std::vector<Real> fidelity_full;
  std::vector<Real> fidelity_reduced;
  std::vector<Real> fidelity_analytic;
  int peak_step = 0;
  Real peak_fidelity = 0.0;
  int predicted_T = 0;
};

/// Evolves the model from its initial state for `steps` steps, recording the
/// squared overlap with the target state in each requested representation.
/// Peaks are located on the full series (first global maximum); on the
/// reduced, then analytic, series when full is not requested.
TransferReport run_transfer(const WalkModel& m, int steps,
                            Representations repr = {});

/// Max |fidelity_full - fidelity_reduced| over the run, restricted to even
/// steps for the two coined walks.
Real cross_check(const WalkModel& m, int steps);

struct SweepPoint {
  int n = 0;
  int predicted_T = 0;
  int peak_step = 0;
  Real peak_fidelity = 0.0;
};

struct SweepReport {
  Family family = Family::Star;
  int sender = 1;
  int receiver = 2;
  std::vector<SweepPoint> points;
};

/// Runs one transfer per N (window 2 * predicted_T) and records the peaks.
/// The N list must be strictly increasing and valid for the family.
SweepReport sweep(Family family, const std::vector<int>& n_values,
                  int sender = 1, int receiver = 2);

struct CheckResult {
  std::string name;
  bool passed = false;
  Real measured = 0.0;
  Real bound = 0.0;
};

/// The model's invariant suite: conservation, closure, unitarity, spectral
/// relations, reduced-vs-full and analytic agreement. Backs the CLI --verify
/// flag. `seed` feeds the random-state checks.
std::vector<CheckResult> run_verification(const WalkModel& m,
                                          unsigned long seed);

}  // namespace qwt

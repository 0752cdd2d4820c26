#include "qwt/walk_model.hpp"

#include <stdexcept>

#include "qwt/complete_loops.hpp"
#include "qwt/star.hpp"
#include "qwt/szegedy.hpp"

namespace qwt {

namespace {

StarModel as_star(const WalkModel& m) {
  return StarModel(m.n, m.sender, m.receiver);
}

CompleteLoopModel as_cl(const WalkModel& m) {
  return CompleteLoopModel(m.n, m.sender, m.receiver);
}

SzegedyModel as_sz(const WalkModel& m) {
  return SzegedyModel(m.n, m.sender, m.receiver);
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Star:
      return "star";
    case Family::CompleteLoops:
      return "complete-loops";
    case Family::Szegedy:
      return "szegedy";
  }
  return "unknown";
}

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "star") return Family::Star;
  if (name == "complete-loops") return Family::CompleteLoops;
  if (name == "szegedy") return Family::Szegedy;
  return std::nullopt;
}

void validate(const WalkModel& m) {
  switch (m.family) {
    case Family::Star:
      as_star(m);
      return;
    case Family::CompleteLoops:
      as_cl(m);
      return;
    case Family::Szegedy:
      as_sz(m);
      return;
  }
  throw std::invalid_argument("walk model: unknown family");
}

int dim(const WalkModel& m) {
  switch (m.family) {
    case Family::Star:
      return star_dim(as_star(m));
    case Family::CompleteLoops:
      return cl_dim(as_cl(m));
    case Family::Szegedy:
      return sz_dim(as_sz(m));
  }
  throw std::invalid_argument("walk model: unknown family");
}

CVector initial_state(const WalkModel& m) {
  switch (m.family) {
    case Family::Star:
      return star_initial(as_star(m));
    case Family::CompleteLoops:
      return cl_initial(as_cl(m));
    case Family::Szegedy:
      return sz_initial(as_sz(m));
  }
  throw std::invalid_argument("walk model: unknown family");
}

CVector target_state(const WalkModel& m) {
  switch (m.family) {
    case Family::Star:
      return star_target(as_star(m));
    case Family::CompleteLoops:
      return cl_target(as_cl(m));
    case Family::Szegedy:
      return sz_target(as_sz(m));
  }
  throw std::invalid_argument("walk model: unknown family");
}

CVector step(const WalkModel& m, const CVector& state) {
  switch (m.family) {
    case Family::Star:
      return star_step(as_star(m), state);
    case Family::CompleteLoops:
      return cl_step(as_cl(m), state);
    case Family::Szegedy:
      return sz_step(as_sz(m), state);
  }
  throw std::invalid_argument("walk model: unknown family");
}

std::vector<CVector> alpha_basis(const WalkModel& m) {
  switch (m.family) {
    case Family::Star:
      return star_alpha_basis(as_star(m));
    case Family::CompleteLoops:
      return cl_alpha_basis(as_cl(m));
    case Family::Szegedy:
      return sz_alpha_basis(as_sz(m));
  }
  throw std::invalid_argument("walk model: unknown family");
}

CMatrix effective_operator(const WalkModel& m) {
  switch (m.family) {
    case Family::Star:
      return star_effective(as_star(m));
    case Family::CompleteLoops:
      return cl_effective(as_cl(m));
    case Family::Szegedy:
      return sz_effective(as_sz(m));
  }
  throw std::invalid_argument("walk model: unknown family");
}

SpectralData spectrum(const WalkModel& m) {
  switch (m.family) {
    case Family::Star:
      return star_spectrum(as_star(m));
    case Family::CompleteLoops:
      return cl_spectrum(as_cl(m));
    case Family::Szegedy:
      return sz_eigenphases(as_sz(m));
  }
  throw std::invalid_argument("walk model: unknown family");
}

Real fidelity_analytic(const WalkModel& m, int t) {
  switch (m.family) {
    case Family::Star:
      return star_fidelity_analytic(as_star(m), t);
    case Family::CompleteLoops:
      return cl_fidelity_analytic(as_cl(m), t);
    case Family::Szegedy:
      return sz_fidelity_analytic(as_sz(m), t);
  }
  throw std::invalid_argument("walk model: unknown family");
}

int transfer_time(const WalkModel& m) {
  switch (m.family) {
    case Family::Star:
      return star_transfer_time(as_star(m));
    case Family::CompleteLoops:
      return cl_transfer_time(as_cl(m));
    case Family::Szegedy:
      return sz_transfer_time(as_sz(m));
  }
  throw std::invalid_argument("walk model: unknown family");
}

int reduced_stride(const WalkModel& m) {
  return m.family == Family::Szegedy ? 1 : 2;
}

}  // namespace qwt

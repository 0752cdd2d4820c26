#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qwt/types.hpp"

namespace qwt {

enum class Family { Star, CompleteLoops, Szegedy };

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

/// Family-erased model descriptor; the uniform front the experiment and CLI
/// layers drive. Vertex labels are 1-based.
struct WalkModel {
  Family family = Family::Star;
  int n = 0;
  int sender = 1;
  int receiver = 2;
};

/// Throws std::invalid_argument when the descriptor violates the family's
/// invariants (minimum size, label range, sender != receiver).
void validate(const WalkModel& m);

int dim(const WalkModel& m);
CVector initial_state(const WalkModel& m);
CVector target_state(const WalkModel& m);
CVector step(const WalkModel& m, const CVector& state);
std::vector<CVector> alpha_basis(const WalkModel& m);
CMatrix effective_operator(const WalkModel& m);
SpectralData spectrum(const WalkModel& m);
Real fidelity_analytic(const WalkModel& m, int t);
int transfer_time(const WalkModel& m);

/// Walk steps covered by one application of the effective operator
/// (2 for the coined walks, 1 for szegedy).
int reduced_stride(const WalkModel& m);

}  // namespace qwt

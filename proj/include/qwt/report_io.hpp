#pragma once

#include <iosfwd>

#include "qwt/experiment.hpp"

namespace qwt {

/// CSV with header "t,fidelity_full,fidelity_reduced,fidelity_analytic", one
/// row per step including t = 0. Absent representations are empty fields;
/// fidelities are printed with 12 fixed decimal digits.
void write_csv(std::ostream& os, const TransferReport& report);

/// JSON summary: model echo, predicted_T, peak_step, peak_fidelity, series.
void write_json(std::ostream& os, const TransferReport& report);

void write_csv(std::ostream& os, const SweepReport& report);
void write_json(std::ostream& os, const SweepReport& report);

}  // namespace qwt

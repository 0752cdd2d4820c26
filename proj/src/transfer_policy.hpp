#pragma once

#include <cmath>
#include <numbers>

namespace qwt::detail {

// Closest integer to 2*pi/omega (half away from zero). The coined walks only
// deliver amplitude at even steps, so when that integer is odd the two even
// neighbours are compared under the model's closed-form fidelity and the
// better one wins; ties go to the smaller step count.
template <typename FidelityFn>
int even_transfer_time(double omega, FidelityFn&& fidelity) {
  const long nearest = std::lround(2.0 * std::numbers::pi / omega);
  if (nearest % 2 == 0) {
    return static_cast<int>(nearest);
  }
  const int lo = static_cast<int>(nearest) - 1;
  const int hi = static_cast<int>(nearest) + 1;
  return fidelity(hi) > fidelity(lo) ? hi : lo;
}

}  // namespace qwt::detail

#pragma once

#include <utility>
#include <vector>

namespace econolab::core {

/// Reference tail exponents of the four classic market power laws:
/// absolute returns, trading volume, trade counts, and managed-asset sizes.
struct StylizedTargets {
  static constexpr double xi_r = 3.0;
  static constexpr double xi_v = 1.5;
  static constexpr double xi_n = 3.4;
  static constexpr double xi_s = 1.05;
};

/// Empirical survival function. Returns (value, tail probability) pairs
/// sorted ascending in value; the i-th sorted value (1-based) gets
/// probability (n - i) / n, so the largest value maps to 0. Ties keep their
/// sorted positions. Requires at least two positive samples.
std::vector<std::pair<double, double>> empirical_ccdf(
    const std::vector<double>& samples);

}  // namespace econolab::core

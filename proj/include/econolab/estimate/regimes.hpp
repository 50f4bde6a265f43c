#pragma once

#include <vector>

namespace econolab::estimate {

/// Piecewise log-log density slopes. Breakpoints split the sample range into
/// segments; within each segment the histogram over 20 log-spaced bins is
/// regressed, counts weighting the fit. A slope s corresponds to a density
/// exponent xi = -s.
struct RegimeSlopes {
  std::vector<double> breakpoints;
  std::vector<double> slopes;
  std::vector<double> slope_errors;
  std::vector<int> counts;  // samples per segment
};

/// Requires positive samples, strictly increasing breakpoints, and at least
/// 50 samples in every induced segment.
RegimeSlopes regime_slopes(const std::vector<double>& samples,
                           const std::vector<double>& breakpoints);

}  // namespace econolab::estimate

#pragma once

#include <vector>

namespace econolab::estimate {

/// Fitted survival-function exponent with its sampling error and the tail
/// bookkeeping that produced it.
struct TailEstimate {
  double exponent = 0.0;   // CCDF exponent xi
  double std_error = 0.0;  // exponent / sqrt(k)
  int k = 0;               // tail order statistics used
  double threshold = 0.0;  // (k+1)-th largest sample
};

/// Hill estimator on the top tail_fraction of the sample:
///   xi = k / sum_{i=1..k} ln(x_(i) / x_(k+1)),  k = floor(tail_fraction * n)
/// over the k largest order statistics. Needs at least 20 tail points; an
/// all-equal tail has no log-spacings to average and is rejected as
/// degenerate. Scale-free: rescaling every sample leaves the estimate
/// unchanged.
TailEstimate hill_tail_exponent(const std::vector<double>& samples,
                                double tail_fraction = 0.05);

}  // namespace econolab::estimate

#include "econolab/estimate/hill.hpp"

#include <algorithm>
#include <cmath>

#include "econolab/errors.hpp"

namespace econolab::estimate {

TailEstimate hill_tail_exponent(const std::vector<double>& samples,
                                double tail_fraction) {
  if (!(tail_fraction > 0.0 && tail_fraction <= 0.5))
    throw DomainError("hill: tail_fraction must be in (0, 0.5]");
  for (double x : samples)
    if (!std::isfinite(x) || x <= 0.0)
      throw DomainError("hill: samples must be positive and finite");

  const int k = int(std::floor(tail_fraction * double(samples.size())));
  if (k < 20 || k + 1 > int(samples.size()))
    throw SizeError("hill: fewer than 20 tail points above the threshold");

  // Top k+1 order statistics, descending.
  std::vector<double> top = samples;
  std::nth_element(top.begin(), top.begin() + k, top.end(),
                   std::greater<double>());
  top.resize(std::size_t(k) + 1);
  std::sort(top.begin(), top.end(), std::greater<double>());

  const double threshold = top[std::size_t(k)];
  double log_sum = 0.0;
  for (int i = 0; i < k; ++i) log_sum += std::log(top[std::size_t(i)] / threshold);
  if (!(log_sum > 0.0))
    throw DegenerateError("hill: all tail samples equal; no spacing to estimate");

  TailEstimate est;
  est.k = k;
  est.threshold = threshold;
  est.exponent = double(k) / log_sum;
  est.std_error = est.exponent / std::sqrt(double(k));
  return est;
}

}  // namespace econolab::estimate

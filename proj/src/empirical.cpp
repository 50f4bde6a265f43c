#include "econolab/empirical.hpp"

#include <algorithm>
#include <cmath>

#include "econolab/errors.hpp"

namespace econolab::core {

std::vector<std::pair<double, double>> empirical_ccdf(
    const std::vector<double>& samples) {
  if (samples.size() < 2)
    throw SizeError("empirical_ccdf: need at least 2 samples");
  for (double x : samples)
    if (!std::isfinite(x) || x <= 0.0)
      throw DomainError("empirical_ccdf: samples must be positive and finite");

  std::vector<double> sorted = samples;
  std::sort(sorted.begin(), sorted.end());
  const double n = double(sorted.size());
  std::vector<std::pair<double, double>> pairs;
  pairs.reserve(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    pairs.emplace_back(sorted[i], (n - double(i + 1)) / n);
  return pairs;
}

}  // namespace econolab::core

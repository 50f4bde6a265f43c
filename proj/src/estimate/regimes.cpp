#include "econolab/estimate/regimes.hpp"

#include <algorithm>
#include <cmath>

#include "econolab/errors.hpp"

namespace econolab::estimate {

namespace {

constexpr int kBins = 20;
constexpr int kMinBinCount = 5;  // thinner bins are dropped from the fit

struct SegmentFit {
  double slope;
  double slope_error;
};

// Count-weighted regression of ln(density) on ln(bin center). Poisson bins
// make count a natural inverse-variance weight for the log density.
SegmentFit fit_segment(const std::vector<double>& seg) {
  const double lo = *std::min_element(seg.begin(), seg.end());
  const double hi = *std::max_element(seg.begin(), seg.end());
  if (!(hi > lo))
    throw DegenerateError("regime_slopes: segment has no spread to bin");

  const double log_ratio = std::log(hi / lo);
  std::vector<int> counts(kBins, 0);
  for (double x : seg) {
    int b = int(std::floor(double(kBins) * std::log(x / lo) / log_ratio));
    b = std::clamp(b, 0, kBins - 1);
    ++counts[std::size_t(b)];
  }

  std::vector<double> xs, ys, ws;
  for (int b = 0; b < kBins; ++b) {
    if (counts[std::size_t(b)] < kMinBinCount) continue;
    const double edge_lo = lo * std::exp(log_ratio * double(b) / kBins);
    const double edge_hi = lo * std::exp(log_ratio * double(b + 1) / kBins);
    const double density =
        double(counts[std::size_t(b)]) / (double(seg.size()) * (edge_hi - edge_lo));
    xs.push_back(0.5 * (std::log(edge_lo) + std::log(edge_hi)));
    ys.push_back(std::log(density));
    ws.push_back(double(counts[std::size_t(b)]));
  }
  if (xs.size() < 3)
    throw SegmentError("regime_slopes: segment histogram too sparse to regress");

  double sw = 0.0, xbar = 0.0, ybar = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sw += ws[i];
    xbar += ws[i] * xs[i];
    ybar += ws[i] * ys[i];
  }
  xbar /= sw;
  ybar /= sw;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += ws[i] * (xs[i] - xbar) * (xs[i] - xbar);
    sxy += ws[i] * (xs[i] - xbar) * (ys[i] - ybar);
  }
  const double slope = sxy / sxx;
  double wrss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double resid = ys[i] - ybar - slope * (xs[i] - xbar);
    wrss += ws[i] * resid * resid;
  }
  const double dof = double(xs.size()) - 2.0;
  return {slope, std::sqrt(std::max(wrss / dof, 0.0) / sxx)};
}

}  // namespace

RegimeSlopes regime_slopes(const std::vector<double>& samples,
                           const std::vector<double>& breakpoints) {
  if (samples.empty()) throw SizeError("regime_slopes: empty sample");
  for (double x : samples)
    if (!std::isfinite(x) || x <= 0.0)
      throw DomainError("regime_slopes: samples must be positive and finite");
  for (std::size_t i = 1; i < breakpoints.size(); ++i)
    if (!(breakpoints[i] > breakpoints[i - 1]))
      throw OrderingError("regime_slopes: breakpoints must be strictly increasing");

  // Segment k covers (b_{k-1}, b_k]; the first starts at the sample minimum,
  // the last ends at the sample maximum.
  const std::size_t nseg = breakpoints.size() + 1;
  std::vector<std::vector<double>> segments(nseg);
  for (double x : samples) {
    const auto it = std::lower_bound(breakpoints.begin(), breakpoints.end(), x);
    segments[std::size_t(it - breakpoints.begin())].push_back(x);
  }

  RegimeSlopes result;
  result.breakpoints = breakpoints;
  for (const auto& seg : segments) {
    if (seg.size() < 50)
      throw SegmentError("regime_slopes: a segment holds fewer than 50 samples");
    const SegmentFit fit = fit_segment(seg);
    result.slopes.push_back(fit.slope);
    result.slope_errors.push_back(fit.slope_error);
    result.counts.push_back(int(seg.size()));
  }
  return result;
}

}  // namespace econolab::estimate

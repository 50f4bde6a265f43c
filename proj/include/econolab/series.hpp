#pragma once

#include <cstddef>
#include <vector>

namespace econolab::core {

/// Timestamped strictly-positive price path. Immutable after construction;
/// the constructor rejects non-increasing times and non-positive prices, so
/// downstream log-return code never has to re-check.
class PriceSeries {
 public:
  PriceSeries(std::vector<double> times, std::vector<double> prices);

  const std::vector<double>& times() const { return times_; }
  const std::vector<double>& prices() const { return prices_; }
  std::size_t size() const { return prices_.size(); }

  /// Grid spacing; throws SpacingError when the grid is not uniform.
  double uniform_spacing(double rel_tol = 1e-9) const;

 private:
  std::vector<double> times_;
  std::vector<double> prices_;
};

/// Log-returns over a fixed interval dt, stamped at the end of each interval.
class ReturnSeries {
 public:
  ReturnSeries(std::vector<double> times, std::vector<double> returns, double dt);

  const std::vector<double>& times() const { return times_; }
  const std::vector<double>& returns() const { return returns_; }
  double dt() const { return dt_; }
  std::size_t size() const { return returns_.size(); }

 private:
  std::vector<double> times_;
  std::vector<double> returns_;
  double dt_;
};

/// returns[i] = ln prices[i+m] - ln prices[i] with m = dt / native spacing.
/// dt must be a positive integer multiple of the (uniform) native spacing.
ReturnSeries log_returns(const PriceSeries& series, double dt);

/// Rebuilds the price path implied by a return sequence, starting at p0 one
/// interval before the first return stamp. Inverse of log_returns up to
/// floating-point roundoff.
PriceSeries cumulate_returns(const ReturnSeries& returns, double p0);

}  // namespace econolab::core

#include "econolab/series.hpp"

#include <cmath>
#include <utility>

#include "econolab/errors.hpp"

namespace econolab::core {

PriceSeries::PriceSeries(std::vector<double> times, std::vector<double> prices)
    : times_(std::move(times)), prices_(std::move(prices)) {
  if (times_.size() != prices_.size())
    throw SizeError("price series: times and prices must have equal length");
  if (times_.empty()) throw SizeError("price series: empty");
  for (std::size_t i = 0; i < prices_.size(); ++i) {
    if (!std::isfinite(prices_[i]) || prices_[i] <= 0.0)
      throw DomainError("price series: prices must be positive and finite");
    if (!std::isfinite(times_[i]))
      throw DomainError("price series: times must be finite");
    if (i > 0 && times_[i] <= times_[i - 1])
      throw OrderingError("price series: times must be strictly increasing");
  }
}

double PriceSeries::uniform_spacing(double rel_tol) const {
  if (times_.size() < 2) throw SizeError("price series: need at least 2 points");
  const double d0 = times_[1] - times_[0];
  for (std::size_t i = 2; i < times_.size(); ++i) {
    const double d = times_[i] - times_[i - 1];
    if (std::abs(d - d0) > rel_tol * std::max(1.0, std::abs(d0)))
      throw SpacingError("price series: non-uniform time grid");
  }
  return d0;
}

ReturnSeries::ReturnSeries(std::vector<double> times, std::vector<double> returns,
                           double dt)
    : times_(std::move(times)), returns_(std::move(returns)), dt_(dt) {
  if (times_.size() != returns_.size())
    throw SizeError("return series: times and returns must have equal length");
  if (!(dt_ > 0.0)) throw DomainError("return series: dt must be positive");
}

ReturnSeries log_returns(const PriceSeries& series, double dt) {
  if (!(dt > 0.0)) throw DomainError("log_returns: dt must be positive");
  if (series.size() < 2) throw SizeError("log_returns: need at least 2 prices");
  const double spacing = series.uniform_spacing();
  const double ratio = dt / spacing;
  const auto m = static_cast<std::size_t>(std::llround(ratio));
  if (m < 1 || std::abs(dt - double(m) * spacing) > 1e-9 * dt)
    throw SpacingError("log_returns: dt is not an integer multiple of the grid spacing");
  if (m >= series.size())
    throw SizeError("log_returns: dt spans the whole series");

  const auto& t = series.times();
  const auto& p = series.prices();
  const std::size_t n = series.size() - m;
  std::vector<double> times(n), rets(n);
  for (std::size_t i = 0; i < n; ++i) {
    times[i] = t[i + m];
    rets[i] = std::log(p[i + m]) - std::log(p[i]);
  }
  return ReturnSeries(std::move(times), std::move(rets), dt);
}

PriceSeries cumulate_returns(const ReturnSeries& returns, double p0) {
  if (!(p0 > 0.0)) throw DomainError("cumulate_returns: p0 must be positive");
  if (returns.size() == 0) throw SizeError("cumulate_returns: empty return series");
  const std::size_t n = returns.size();
  std::vector<double> times(n + 1), prices(n + 1);
  times[0] = returns.times()[0] - returns.dt();
  prices[0] = p0;
  for (std::size_t i = 0; i < n; ++i) {
    times[i + 1] = returns.times()[i];
    prices[i + 1] = prices[i] * std::exp(returns.returns()[i]);
  }
  return PriceSeries(std::move(times), std::move(prices));
}

}  // namespace econolab::core

#include "econolab/action/arbitrage.hpp"

#include "econolab/errors.hpp"

namespace econolab::action {

double arbitrage_functional(const core::PriceSeries& portfolio, double r) {
  if (portfolio.size() < 2)
    throw econolab::SizeError("arbitrage_functional: need at least 2 points");
  const double dt = portfolio.uniform_spacing();
  const auto& p = portfolio.prices();
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const double excess = (p[i + 1] - p[i]) - r * p[i] * dt;
    total += excess * excess;
  }
  return total;
}

}  // namespace econolab::action

#pragma once

#include "econolab/series.hpp"

namespace econolab::action {

/// Discrete arbitrage measure of a hedged portfolio path against the
/// riskless rate r: sum over steps of (dP_i - r * P_i * dt)^2 with left-point
/// quadrature on a uniform grid. Zero exactly when the path compounds at r
/// every step; for a driftless-at-r diffusion each term concentrates around
/// h0 * P^2 * dt.
double arbitrage_functional(const core::PriceSeries& portfolio, double r);

}  // namespace econolab::action

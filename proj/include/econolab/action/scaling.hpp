#pragma once

namespace econolab::action {

/// Crossover scaling form 1/P = A * dS^xi_r * f(h * dS^(xi - xi_r)) with the
/// concrete choice f(z) = (1 + z^2)^(beta_exp / 2), which is constant for
/// z << 1 and behaves as z^beta_exp for z >> 1. The effective log-log slope
/// therefore moves from xi_r to xi_r + beta_exp * (xi - xi_r) around the
/// crossover scale dS* = h^(-1 / (xi - xi_r)).
struct ScalingLaw {
  double amplitude_A = 1.0;
  double xi_r = 0.0;
  double xi = 1.0;
  double beta_exp = 1.0;
  double field_h = 0.0;

  void validate() const;
  /// Finite and positive whenever field_h > 0.
  double crossover_scale() const;
};

double scaling_order_parameter(const ScalingLaw& law, double dS);

}  // namespace econolab::action

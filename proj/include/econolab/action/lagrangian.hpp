#pragma once

#include <vector>

namespace econolab::action {

/// Quadratic action coefficients: kinetic term a * hdot^2 / 2 and potential
/// term b * h^2 / 2. The stationarity condition gives a * h'' = b * h, whose
/// first integral a * hdot^2 / 2 - b * h^2 / 2 stays constant along any
/// solution.
struct ActionCoefficients {
  double a = 1.0;
  double b = 1.0;

  void validate() const;
};

double lagrangian_value(const ActionCoefficients& coef, double h, double hdot);

/// Solution samples of the stationarity dynamics on a uniform grid.
struct Trajectory {
  std::vector<double> times;
  std::vector<double> h_values;
  std::vector<double> hdot_values;
};

/// Classic fourth-order Runge-Kutta on h'' = (b/a) h from (h0, hdot0) up to
/// t_end. The step must resolve the horizon (step <= t_end / 10); the grid is
/// i * step for i = 0..round(t_end / step).
Trajectory integrate_euler_lagrange(const ActionCoefficients& coef, double h0,
                                    double hdot0, double t_end, double step);

/// First integral a * hdot^2 / 2 - b * h^2 / 2 evaluated at every grid point.
std::vector<double> conserved_quantity(const ActionCoefficients& coef,
                                       const Trajectory& traj);

}  // namespace econolab::action

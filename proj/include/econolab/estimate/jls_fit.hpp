#pragma once

#include <array>

#include "econolab/series.hpp"

namespace econolab::estimate {

/// Log-periodic power-law trend of the log price ahead of a critical time:
///   ln p(t) = A + B (tc - t)^m + C (tc - t)^m cos(omega ln(tc - t) - phi)
/// B is negative for a bubble; |C| <= |B| keeps the trend monotone-dominated
/// (recommended, not enforced).
struct JlsParams {
  double A = 0.0;
  double B = -1.0;
  double C = 0.0;
  double t_c = 1.0;
  double m = 0.5;
  double omega = 8.0;
  double phi = 0.0;

  void validate() const;
};

/// Direct evaluation of the trend at t < t_c.
double jls_evaluate(const JlsParams& params, double t);

/// Search box for the three nonlinear parameters. Defaults follow the
/// fitter's standard resolution; the critical-time range must lie strictly
/// after the last observation.
struct JlsSearchGrid {
  double tc_min = 0.0;
  double tc_max = 0.0;
  int tc_count = 50;
  double m_min = 0.05;
  double m_max = 0.95;
  int m_count = 15;
  double omega_min = 2.0;
  double omega_max = 20.0;
  int omega_count = 30;

  void validate(double last_time) const;
};

struct JlsFit {
  JlsParams params;
  double rmse = 0.0;  // root-mean-square log-price residual
  std::array<int, 3> search_grid_size{0, 0, 0};
};

/// Separable fit: for every grid point of (t_c, m, omega) the linear block
/// (A, B, C cos phi, C sin phi) is solved by least squares on the log price,
/// then the best grid point is polished by a local simplex search over the
/// nonlinear triple with the same inner solve. Deterministic given data and
/// grid; rank-deficient grid points are skipped, and a fully skipped grid is
/// an error.
JlsFit jls_fit(const core::PriceSeries& series, const JlsSearchGrid& grid);

}  // namespace econolab::estimate

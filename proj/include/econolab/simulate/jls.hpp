#pragma once

#include <functional>
#include <optional>

#include "econolab/random.hpp"
#include "econolab/series.hpp"

namespace econolab::simulate {

/// Log-periodic crash hazard parameters:
///   h(t) = b' (tc - t)^(m-1) + c' (tc - t)^(m-1) cos(omega ln(tc - t) - phi')
/// Requiring |c'| <= b' keeps h(t) >= 0 everywhere below tc. Construction-time
/// validation enforces that bound; pass clamp_negative = true to hazard_rate
/// for exploratory parameter sets that dip below zero.
struct HazardParams {
  double b_prime = 1.0;
  double c_prime = 0.0;
  double m = 0.5;
  double omega = 6.0;
  double phi_prime = 0.0;
  double t_c = 1.0;

  void validate() const;
};

/// Hazard intensity at time t < t_c.
double hazard_rate(const HazardParams& hz, double t, bool clamp_negative = false);

/// Jump-diffusion path configuration. The grid i*dt for i = 0..n must end at
/// or before t_c; k in [0,1) is the multiplicative crash loss.
struct JlsPathConfig {
  HazardParams hazard;
  double k = 0.2;
  double sigma = 0.0;
  double p0 = 1.0;
  int n = 100;
  double dt = 0.01;

  void validate() const;
};

struct JlsPathResult {
  core::PriceSeries series;
  std::optional<double> crash_time;  // grid time right after the crash step
};

/// Simulates dp/p = mu dt + sigma dW - k dj with the crash intensity supplied
/// by cfg.hazard. Per step the crash fires with probability h(t) * dt, the
/// drift is mu(t) = k * h(t) so the pre-crash expected move vanishes, and a
/// single crash multiplies the price by (1 - k). After the crash the hazard
/// is zero and the path continues as a driftless geometric diffusion.
JlsPathResult jls_path(const JlsPathConfig& cfg, core::RandomSource& rng);

/// Same dynamics with an arbitrary nonnegative intensity function; used for
/// constant-hazard calibration runs and mixed-intensity experiments. The
/// resolution requirement h(t) * dt < 0.5 is enforced on the grid.
struct JumpDiffusionConfig {
  double k = 0.2;
  double sigma = 0.0;
  double p0 = 1.0;
  int n = 100;
  double dt = 0.01;

  void validate() const;
};

JlsPathResult jump_diffusion_path(const JumpDiffusionConfig& cfg,
                                  const std::function<double(double)>& hazard,
                                  core::RandomSource& rng);

}  // namespace econolab::simulate

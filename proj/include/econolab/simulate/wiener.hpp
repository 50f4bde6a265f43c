#pragma once

#include "econolab/random.hpp"
#include "econolab/series.hpp"

namespace econolab::simulate {

/// Geometric diffusion parameters: drift rate mu0 and variance rate h0 per
/// unit time, both applied over n steps of size dt starting from p0.
struct WienerConfig {
  double mu0 = 0.0;
  double h0 = 0.0;
  double p0 = 1.0;
  int n = 1;
  double dt = 1.0;

  void validate() const;
};

/// Simulates the diffusion with exact log-space increments:
///   P[i+1] = P[i] * exp((mu0 - h0/2) * dt + sqrt(h0 * dt) * z)
/// which keeps prices positive for any step size. The zero-noise limit is
/// therefore P[i] = p0 * exp(mu0 * dt * i), not the Euler polynomial; per-step
/// log-returns carry the -h0/2 drift correction.
core::PriceSeries wiener_path(const WienerConfig& cfg, core::RandomSource& rng);

}  // namespace econolab::simulate

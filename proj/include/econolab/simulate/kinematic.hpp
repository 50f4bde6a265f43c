#pragma once

#include <vector>

#include "econolab/random.hpp"

namespace econolab::simulate {

/// Constant-velocity / constant-acceleration displacement sampler. Horizons
/// are drawn uniform on (0, dt_max] and mapped through
///   dS = v0 * dt + accel * dt^2 / 2,
/// producing a flat displacement density where the linear term dominates and
/// a dS^(-1/2) density where the quadratic term does. The two regimes trade
/// places around dt = 2 * v0 / accel.
struct KinematicConfig {
  double v0 = 1.0;
  double accel = 0.0;
  double dt_max = 1.0;
  int n = 1;

  void validate() const;
};

std::vector<double> kinematic_displacements(const KinematicConfig& cfg,
                                            core::RandomSource& rng);

}  // namespace econolab::simulate

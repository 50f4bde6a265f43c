#include "econolab/simulate/kinematic.hpp"

#include "econolab/errors.hpp"

namespace econolab::simulate {

void KinematicConfig::validate() const {
  if (!(v0 >= 0.0) || !(accel >= 0.0))
    throw ConstraintError("kinematic: v0 and accel must be >= 0");
  if (!(v0 + accel > 0.0))
    throw ConstraintError("kinematic: v0 and accel cannot both be zero");
  if (!(dt_max > 0.0)) throw ConstraintError("kinematic: dt_max must be > 0");
  if (n < 1) throw SizeError("kinematic: n must be >= 1");
}

std::vector<double> kinematic_displacements(const KinematicConfig& cfg,
                                            core::RandomSource& rng) {
  cfg.validate();
  std::vector<double> out;
  out.reserve(std::size_t(cfg.n));
  for (int i = 0; i < cfg.n; ++i) {
    const double dt = cfg.dt_max * rng.uniform_open01();
    out.push_back(cfg.v0 * dt + 0.5 * cfg.accel * dt * dt);
  }
  return out;
}

}  // namespace econolab::simulate

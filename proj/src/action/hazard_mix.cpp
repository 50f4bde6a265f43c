#include "econolab/action/hazard_mix.hpp"

#include <cmath>

#include "econolab/errors.hpp"

namespace econolab::action {

void HazardMix::validate() const {
  if (!(c1_weight >= 0.0) || !(c2_weight >= 0.0))
    throw ConstraintError("hazard mix: weights must be >= 0");
  if (!(h_c > 0.0)) throw ConstraintError("hazard mix: h_c must be > 0");
  if (!(std::abs(h_r0) <= h_c))
    throw ConstraintError("hazard mix: |h_r0| must not exceed h_c");
  if (!(omega > 0.0)) throw ConstraintError("hazard mix: omega must be > 0");
}

void DeltaMap::validate() const {
  if (kind != DeltaKind::Log && !(alpha > 0.0))
    throw ConstraintError("delta map: alpha must be > 0 for power maps");
  if (!std::isfinite(t_c)) throw ConstraintError("delta map: t_c must be finite");
}

double DeltaMap::operator()(double t) const {
  validate();
  if (!(t < t_c)) throw DomainError("delta map: t must be below t_c");
  const double tau = t_c - t;
  switch (kind) {
    case DeltaKind::PowerDecreasing:
      return std::pow(tau, alpha);
    case DeltaKind::Log:
      return std::log(tau);
    case DeltaKind::PowerIncreasing:
      return std::pow(tau, -alpha);
  }
  throw DomainError("delta map: unknown kind");
}

std::vector<double> hazard_ratio_profile(const HazardMix& mix,
                                         const DeltaMap& map,
                                         const std::vector<double>& times) {
  mix.validate();
  map.validate();
  std::vector<double> profile;
  profile.reserve(times.size());
  for (double t : times)
    profile.push_back(mix.h_c + mix.h_r0 * std::cos(mix.omega * map(t)));
  return profile;
}

double mixed_crash_intensity(const HazardMix& mix, double h1, double h2) {
  mix.validate();
  if (!(h1 >= 0.0) || !(h2 >= 0.0))
    throw DomainError("mixed_crash_intensity: hazards must be >= 0");
  return mix.c1_weight * h1 + mix.c2_weight * h2;
}

}  // namespace econolab::action

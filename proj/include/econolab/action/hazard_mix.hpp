#pragma once

#include <vector>

namespace econolab::action {

/// Two-population crash intensity: total intensity is the weighted sum
/// c1_weight * h1 + c2_weight * h2, and the ratio h1/h2 oscillates
/// harmonically in the perceived distance-to-crash coordinate:
///   ratio(delta) = h_c + h_r0 * cos(omega * delta).
/// |h_r0| <= h_c keeps the ratio nonnegative.
struct HazardMix {
  double c1_weight = 1.0;
  double c2_weight = 0.0;
  double h_c = 1.0;
  double h_r0 = 0.0;
  double omega = 1.0;

  void validate() const;
};

/// How the distance-to-crash coordinate contracts toward the critical time.
/// All maps are evaluated on tau = t_c - t > 0 so powers and logs stay real:
/// PowerDecreasing is tau^alpha, Log is ln(tau), PowerIncreasing is
/// tau^(-alpha).
enum class DeltaKind { PowerDecreasing, Log, PowerIncreasing };

struct DeltaMap {
  DeltaKind kind = DeltaKind::Log;
  double alpha = 1.0;  // unused for the log map
  double t_c = 1.0;

  void validate() const;
  double operator()(double t) const;
};

/// Ratio profile h_c + h_r0 * cos(omega * delta(t)) over a grid of times
/// strictly below t_c. With the log map the maxima recur at geometrically
/// spaced tau, with successive ratios exp(2 pi / omega).
std::vector<double> hazard_ratio_profile(const HazardMix& mix,
                                         const DeltaMap& map,
                                         const std::vector<double>& times);

/// Combined intensity per unit time for given component intensities.
double mixed_crash_intensity(const HazardMix& mix, double h1, double h2);

}  // namespace econolab::action

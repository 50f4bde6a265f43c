#pragma once

#include <optional>
#include <vector>

#include "econolab/random.hpp"

namespace econolab::simulate {

/// One-tick move regimes: the regular market draws the expected move dS1 with
/// probability p and the balancing unexpected move dS2 otherwise; with
/// probability pA + pB the tick is instead set by large players and equals
/// dS3.
enum class TickRegime { Regular, BigPlayer };

struct ImpactTickParams {
  double p = 0.5;
  double dS1 = 1.0;
  double dS2 = -1.0;
  double pA = 0.0;
  double pB = 0.0;
  double dS3 = 0.0;

  /// Fills dS2 from the zero-expectation condition p*dS1 + (1-p)*dS2 = 0.
  static ImpactTickParams martingale(double p, double dS1, double pA = 0.0,
                                     double pB = 0.0, double dS3 = 0.0);

  void validate() const;
  bool regular_part_is_martingale(double tol = 1e-12) const;
  double regular_mean() const { return p * dS1 + (1.0 - p) * dS2; }
};

struct Tick {
  TickRegime regime;
  double move;
};

/// Independent tick stream: regular regime with probability 1 - pA - pB,
/// big-player move dS3 otherwise. Requires the regular part to be a
/// martingale.
std::vector<Tick> impact_tick_stream(const ImpactTickParams& params, int n,
                                     core::RandomSource& rng);

/// Quantity solved for by solve_impact_constraint.
enum class ImpactUnknown {
  UnexpectedMove,   // dS2 from the regular-part zero-expectation condition
  BigPlayerMove,    // dS3 given the expected total move
  ExpectedTotalMove // dS from the full mixed-regime balance
};

/// Solves the one-tick balance for the marked unknown.
///  - UnexpectedMove ignores the big-player block: dS2 = -p*dS1 / (1-p).
///  - ExpectedTotalMove: dS = dS3 - (1-pA-pB)*(p*dS1+(1-p)*dS2)/(pA+pB);
///    with a martingale regular part this reduces to dS = dS3.
///  - BigPlayerMove needs the expected total move supplied and inverts the
///    same balance for dS3.
/// Throws SingularError when the unknown's coefficient vanishes (p = 1 for
/// dS2, pA + pB = 0 for the mixed-regime unknowns).
double solve_impact_constraint(const ImpactTickParams& params,
                               ImpactUnknown unknown,
                               std::optional<double> expected_total_move = {});

/// Informed/noise two-population tick model: informed moves dS1 with
/// probability p, noise moves dS2 = -p*dS1/(1-p) otherwise.
struct TwoPopulationConfig {
  double p = 0.9;
  double dS1 = 1.0;
  int n = 1;

  void validate() const;
  double derived_dS2() const { return -p * dS1 / (1.0 - p); }
};

/// Tick sample plus the exact variance split: sigma1_sq = p*dS1^2 from the
/// informed side, sigma2_sq = (1-p)*dS2^2 from the noise side, their ratio
/// being p/(1-p), so the noise population dominates for p near 1.
struct TwoPopulationResult {
  std::vector<double> ticks;
  double sigma1_sq = 0.0;
  double sigma2_sq = 0.0;
  double sigma_sq = 0.0;
  double sample_variance = 0.0;
};

TwoPopulationResult two_population_ticks(const TwoPopulationConfig& cfg,
                                         core::RandomSource& rng);

}  // namespace econolab::simulate

#include "econolab/simulate/impact.hpp"

#include <cmath>

#include "econolab/errors.hpp"

namespace econolab::simulate {

ImpactTickParams ImpactTickParams::martingale(double p, double dS1, double pA,
                                              double pB, double dS3) {
  ImpactTickParams params;
  params.p = p;
  params.dS1 = dS1;
  params.pA = pA;
  params.pB = pB;
  params.dS3 = dS3;
  if (!(p > 0.0 && p < 1.0))
    throw ConstraintError("impact ticks: p must be in (0,1)");
  params.dS2 = -p * dS1 / (1.0 - p);
  return params;
}

void ImpactTickParams::validate() const {
  if (!(p > 0.0 && p < 1.0))
    throw ConstraintError("impact ticks: p must be in (0,1)");
  if (!(pA >= 0.0 && pA < 1.0) || !(pB >= 0.0 && pB < 1.0))
    throw ConstraintError("impact ticks: pA and pB must be in [0,1)");
  if (!(pA + pB < 1.0))
    throw ConstraintError("impact ticks: pA + pB must be < 1");
  if (!std::isfinite(dS1) || !std::isfinite(dS2) || !std::isfinite(dS3))
    throw ConstraintError("impact ticks: move sizes must be finite");
}

bool ImpactTickParams::regular_part_is_martingale(double tol) const {
  return std::abs(regular_mean()) <= tol * std::max(1.0, std::abs(dS1));
}

std::vector<Tick> impact_tick_stream(const ImpactTickParams& params, int n,
                                     core::RandomSource& rng) {
  params.validate();
  if (!params.regular_part_is_martingale())
    throw ConstraintError(
        "impact ticks: regular part violates p*dS1 + (1-p)*dS2 = 0");
  if (n < 1) throw SizeError("impact ticks: n must be >= 1");

  const double p_big = params.pA + params.pB;
  std::vector<Tick> ticks;
  ticks.reserve(std::size_t(n));
  for (int i = 0; i < n; ++i) {
    if (rng.uniform01() < p_big) {
      ticks.push_back({TickRegime::BigPlayer, params.dS3});
    } else {
      const double move = rng.uniform01() < params.p ? params.dS1 : params.dS2;
      ticks.push_back({TickRegime::Regular, move});
    }
  }
  return ticks;
}

double solve_impact_constraint(const ImpactTickParams& params,
                               ImpactUnknown unknown,
                               std::optional<double> expected_total_move) {
  const double weight_big = params.pA + params.pB;
  const double weight_regular = 1.0 - weight_big;

  switch (unknown) {
    case ImpactUnknown::UnexpectedMove: {
      if (std::abs(1.0 - params.p) < 1e-15)
        throw SingularError("solve_impact_constraint: p = 1 leaves dS2 unweighted");
      return -params.p * params.dS1 / (1.0 - params.p);
    }
    case ImpactUnknown::ExpectedTotalMove: {
      if (weight_big < 1e-15)
        throw SingularError(
            "solve_impact_constraint: pA + pB = 0 leaves the total move unweighted");
      return params.dS3 - weight_regular * params.regular_mean() / weight_big;
    }
    case ImpactUnknown::BigPlayerMove: {
      if (weight_big < 1e-15)
        throw SingularError(
            "solve_impact_constraint: pA + pB = 0 leaves dS3 unweighted");
      if (!expected_total_move)
        throw DomainError(
            "solve_impact_constraint: solving for dS3 needs the expected total move");
      return *expected_total_move +
             weight_regular * params.regular_mean() / weight_big;
    }
  }
  throw DomainError("solve_impact_constraint: unknown marker not recognized");
}

void TwoPopulationConfig::validate() const {
  if (!(p > 0.0 && p < 1.0))
    throw SingularError("two populations: p must be in (0,1)");
  if (!std::isfinite(dS1)) throw ConstraintError("two populations: dS1 must be finite");
  if (n < 1) throw SizeError("two populations: n must be >= 1");
}

TwoPopulationResult two_population_ticks(const TwoPopulationConfig& cfg,
                                         core::RandomSource& rng) {
  cfg.validate();
  const double dS2 = cfg.derived_dS2();

  TwoPopulationResult result;
  result.sigma1_sq = cfg.p * cfg.dS1 * cfg.dS1;
  result.sigma2_sq = (1.0 - cfg.p) * dS2 * dS2;
  result.sigma_sq = result.sigma1_sq + result.sigma2_sq;

  result.ticks.reserve(std::size_t(cfg.n));
  double sum = 0.0;
  for (int i = 0; i < cfg.n; ++i) {
    const double move = rng.uniform01() < cfg.p ? cfg.dS1 : dS2;
    result.ticks.push_back(move);
    sum += move;
  }
  const double mean = sum / double(cfg.n);
  double ss = 0.0;
  for (double move : result.ticks) ss += (move - mean) * (move - mean);
  result.sample_variance = cfg.n > 1 ? ss / double(cfg.n - 1) : 0.0;
  return result;
}

}  // namespace econolab::simulate

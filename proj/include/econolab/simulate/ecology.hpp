#pragma once

#include <vector>

#include "econolab/random.hpp"

namespace econolab::simulate {

/// Fund population: sizes S follow a Zipf density S^-2 on [s_min, s_max] and
/// trade volumes V = S^delta. Bounded support keeps every density involved
/// normalizable; s_min = s_max degenerates to a point mass (allowed, and
/// flagged downstream by the tail estimator).
struct FundEcology {
  double delta = 1.0;
  double s_min = 1.0;
  double s_max = 1e6;

  void validate() const;
};

/// Draws per-trade volumes. Observed trades weight each fund size by its
/// trading frequency F(S) ~ S^(1 - 3*delta/2), so the size of the fund behind
/// a random trade has density ~ S^(-1 - 3*delta/2); sampling uses the exact
/// inverse CDF of that truncated power law and maps through V = S^delta.
/// The resulting volume tail P(V > x) ~ x^(-3/2) for any delta.
std::vector<double> fund_ecology_volumes(const FundEcology& eco, int n,
                                         core::RandomSource& rng);

}  // namespace econolab::simulate

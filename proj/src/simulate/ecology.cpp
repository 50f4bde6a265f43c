#include "econolab/simulate/ecology.hpp"

#include <cmath>

#include "econolab/errors.hpp"

namespace econolab::simulate {

void FundEcology::validate() const {
  if (!(delta > 0.0)) throw ConstraintError("ecology: delta must be > 0");
  if (!(s_min > 0.0) || !std::isfinite(s_max) || !(s_min <= s_max))
    throw SupportError("ecology: need 0 < s_min <= s_max < infinity");
}

std::vector<double> fund_ecology_volumes(const FundEcology& eco, int n,
                                         core::RandomSource& rng) {
  eco.validate();
  if (n < 1) throw SizeError("ecology: n must be >= 1");

  std::vector<double> volumes;
  volumes.reserve(std::size_t(n));

  if (eco.s_min == eco.s_max) {
    volumes.assign(std::size_t(n), std::pow(eco.s_min, eco.delta));
    return volumes;
  }

  // Trade-weighted size density ~ S^(-1-gamma) with gamma = 3*delta/2.
  const double gamma = 1.5 * eco.delta;
  const double lo = std::pow(eco.s_min, -gamma);
  const double hi = std::pow(eco.s_max, -gamma);
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform01();
    const double size = std::pow(lo + u * (hi - lo), -1.0 / gamma);
    volumes.push_back(std::pow(size, eco.delta));
  }
  return volumes;
}

}  // namespace econolab::simulate

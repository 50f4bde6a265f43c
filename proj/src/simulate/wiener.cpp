#include "econolab/simulate/wiener.hpp"

#include <cmath>
#include <vector>

#include "econolab/errors.hpp"

namespace econolab::simulate {

void WienerConfig::validate() const {
  if (!(h0 >= 0.0)) throw ConstraintError("wiener: h0 must be >= 0");
  if (!(p0 > 0.0)) throw ConstraintError("wiener: p0 must be > 0");
  if (n < 1) throw ConstraintError("wiener: n must be >= 1");
  if (!(dt > 0.0)) throw ConstraintError("wiener: dt must be > 0");
}

core::PriceSeries wiener_path(const WienerConfig& cfg, core::RandomSource& rng) {
  cfg.validate();
  const double drift = (cfg.mu0 - 0.5 * cfg.h0) * cfg.dt;
  const double vol = std::sqrt(cfg.h0 * cfg.dt);

  std::vector<double> times(cfg.n + 1), prices(cfg.n + 1);
  times[0] = 0.0;
  prices[0] = cfg.p0;
  for (int i = 0; i < cfg.n; ++i) {
    const double z = vol > 0.0 ? rng.normal() : 0.0;
    times[i + 1] = double(i + 1) * cfg.dt;
    prices[i + 1] = prices[i] * std::exp(drift + vol * z);
  }
  return core::PriceSeries(std::move(times), std::move(prices));
}

}  // namespace econolab::simulate

#include "econolab/simulate/jls.hpp"

#include <cmath>
#include <vector>

#include "econolab/errors.hpp"

namespace econolab::simulate {

void HazardParams::validate() const {
  if (!(b_prime >= 0.0)) throw ConstraintError("hazard: b' must be >= 0");
  if (!(std::abs(c_prime) <= b_prime))
    throw ConstraintError("hazard: |c'| must not exceed b'");
  if (!(m > 0.0 && m < 1.0)) throw ConstraintError("hazard: m must be in (0,1)");
  if (!(omega > 0.0)) throw ConstraintError("hazard: omega must be > 0");
  if (!std::isfinite(t_c)) throw ConstraintError("hazard: t_c must be finite");
}

double hazard_rate(const HazardParams& hz, double t, bool clamp_negative) {
  if (!clamp_negative) hz.validate();
  if (!(t < hz.t_c)) throw DomainError("hazard_rate: t must be below t_c");
  const double tau = hz.t_c - t;
  const double power = std::pow(tau, hz.m - 1.0);
  const double h = power * (hz.b_prime +
                            hz.c_prime * std::cos(hz.omega * std::log(tau) -
                                                  hz.phi_prime));
  return clamp_negative && h < 0.0 ? 0.0 : h;
}

void JlsPathConfig::validate() const {
  hazard.validate();
  if (!(k >= 0.0 && k < 1.0)) throw ConstraintError("jls: k must be in [0,1)");
  if (!(sigma >= 0.0)) throw ConstraintError("jls: sigma must be >= 0");
  if (!(p0 > 0.0)) throw ConstraintError("jls: p0 must be > 0");
  if (n < 1) throw ConstraintError("jls: n must be >= 1");
  if (!(dt > 0.0)) throw ConstraintError("jls: dt must be > 0");
  if (double(n) * dt > hazard.t_c * (1.0 + 1e-12))
    throw DomainError("jls: grid extends past t_c");
}

void JumpDiffusionConfig::validate() const {
  if (!(k >= 0.0 && k < 1.0)) throw ConstraintError("jump diffusion: k must be in [0,1)");
  if (!(sigma >= 0.0)) throw ConstraintError("jump diffusion: sigma must be >= 0");
  if (!(p0 > 0.0)) throw ConstraintError("jump diffusion: p0 must be > 0");
  if (n < 1) throw ConstraintError("jump diffusion: n must be >= 1");
  if (!(dt > 0.0)) throw ConstraintError("jump diffusion: dt must be > 0");
}

JlsPathResult jump_diffusion_path(const JumpDiffusionConfig& cfg,
                                  const std::function<double(double)>& hazard,
                                  core::RandomSource& rng) {
  cfg.validate();

  // Pre-scan the hazard on the step left endpoints so a too-coarse grid is
  // rejected before any variate is drawn.
  std::vector<double> h(cfg.n);
  for (int i = 0; i < cfg.n; ++i) {
    h[i] = hazard(double(i) * cfg.dt);
    if (!(h[i] >= 0.0)) throw DomainError("jump diffusion: hazard must be >= 0");
    if (h[i] * cfg.dt >= 0.5)
      throw ResolutionError("jump diffusion: h(t) * dt >= 0.5; refine the grid");
  }

  const double ito = 0.5 * cfg.sigma * cfg.sigma * cfg.dt;
  const double vol = cfg.sigma * std::sqrt(cfg.dt);

  std::vector<double> times(cfg.n + 1), prices(cfg.n + 1);
  times[0] = 0.0;
  prices[0] = cfg.p0;
  std::optional<double> crash_time;

  for (int i = 0; i < cfg.n; ++i) {
    times[i + 1] = double(i + 1) * cfg.dt;
    const double rate = crash_time ? 0.0 : h[i];
    const double drift = cfg.k * rate * cfg.dt - ito;
    const double z = vol > 0.0 ? rng.normal() : 0.0;
    double next = prices[i] * std::exp(drift + vol * z);
    if (!crash_time && rng.uniform01() < rate * cfg.dt) {
      next *= (1.0 - cfg.k);
      crash_time = times[i + 1];
    }
    prices[i + 1] = next;
  }
  return {core::PriceSeries(std::move(times), std::move(prices)), crash_time};
}

JlsPathResult jls_path(const JlsPathConfig& cfg, core::RandomSource& rng) {
  cfg.validate();
  JumpDiffusionConfig base{cfg.k, cfg.sigma, cfg.p0, cfg.n, cfg.dt};
  const HazardParams hz = cfg.hazard;
  return jump_diffusion_path(
      base, [&hz](double t) { return hazard_rate(hz, t); }, rng);
}

}  // namespace econolab::simulate

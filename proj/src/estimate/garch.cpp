#include "econolab/estimate/garch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "econolab/errors.hpp"
#include "optim.hpp"

namespace econolab::estimate {

namespace {
constexpr double kLog2Pi = 1.8378770664093454836;
constexpr double kPersistenceCap = 1.0 - 1e-6;
}  // namespace

void GarchSpec::validate() const {
  if (!(omega >= 0.0)) throw ConstraintError("garch: omega must be >= 0");
  for (double a : alpha)
    if (!(a >= 0.0)) throw ConstraintError("garch: alpha coefficients must be >= 0");
  for (double b : beta)
    if (!(b >= 0.0)) throw ConstraintError("garch: beta coefficients must be >= 0");
  if (!std::isfinite(mu)) throw ConstraintError("garch: mu must be finite");
}

double GarchSpec::persistence() const {
  double s = 0.0;
  for (double a : alpha) s += a;
  for (double b : beta) s += b;
  return s;
}

double GarchSpec::unconditional_variance() const {
  return omega / (1.0 - persistence());
}

core::ReturnSeries garch_simulate(const GarchSpec& spec, int n,
                                  core::RandomSource& rng, double dt) {
  spec.validate();
  if (!spec.is_stationary())
    throw StationarityError("garch_simulate: sum(alpha) + sum(beta) must be < 1");
  if (n < 1) throw SizeError("garch_simulate: n must be >= 1");
  if (!(dt > 0.0)) throw DomainError("garch_simulate: dt must be > 0");

  const std::size_t p = spec.alpha.size();
  const std::size_t q = spec.beta.size();
  const double h_bar = spec.unconditional_variance();

  // Rolling pre-sample state, newest first.
  std::vector<double> past_sq(p, h_bar);
  std::vector<double> past_h(q, h_bar);

  std::vector<double> times(static_cast<std::size_t>(n));
  std::vector<double> rets(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) {
    double h = spec.omega;
    for (std::size_t i = 0; i < p; ++i) h += spec.alpha[i] * past_sq[i];
    for (std::size_t j = 0; j < q; ++j) h += spec.beta[j] * past_h[j];
    const double innovation = std::sqrt(h) * rng.normal();
    times[std::size_t(t)] = double(t + 1) * dt;
    rets[std::size_t(t)] = spec.mu + innovation;

    if (p > 0) {
      std::rotate(past_sq.rbegin(), past_sq.rbegin() + 1, past_sq.rend());
      past_sq[0] = innovation * innovation;
    }
    if (q > 0) {
      std::rotate(past_h.rbegin(), past_h.rbegin() + 1, past_h.rend());
      past_h[0] = h;
    }
  }
  return core::ReturnSeries(std::move(times), std::move(rets), dt);
}

std::vector<double> garch_variance_filter(const GarchSpec& spec,
                                          const std::vector<double>& returns,
                                          double h_init) {
  spec.validate();
  if (!(h_init >= 0.0))
    throw DomainError("garch_variance_filter: h_init must be >= 0");

  const std::size_t n = returns.size();
  const std::size_t p = spec.alpha.size();
  const std::size_t q = spec.beta.size();
  std::vector<double> h(n + 1);
  h[0] = h_init;
  for (std::size_t t = 1; t <= n; ++t) {
    double value = spec.omega;
    for (std::size_t i = 0; i < p; ++i) {
      const double dev = (t >= i + 1) ? returns[t - 1 - i] - spec.mu : 0.0;
      value += (t >= i + 1) ? spec.alpha[i] * dev * dev : spec.alpha[i] * h_init;
    }
    for (std::size_t j = 0; j < q; ++j)
      value += (t >= j + 1) ? spec.beta[j] * h[t - 1 - j] : spec.beta[j] * h_init;
    h[t] = value;
  }
  return h;
}

double least_action_predict(double h_now, double realized_return_rate,
                            double mu, double c) {
  if (!(h_now >= 0.0)) throw DomainError("least_action_predict: h must be >= 0");
  if (!(c > 0.0)) throw DomainError("least_action_predict: c must be > 0");
  const double dev = realized_return_rate - mu;
  return h_now + c * (dev * dev);
}

namespace {

struct FitContext {
  const std::vector<double>& r;
  double h_anchor;  // likelihood recursion seed: sample variance of r
};

// Mean negative Gaussian log-likelihood for GARCH(1,1) in natural
// parameters (mu, omega, alpha, beta).
double mean_negloglik(const FitContext& ctx, double mu, double omega,
                      double alpha, double beta) {
  const std::size_t n = ctx.r.size();
  double h = ctx.h_anchor;
  double acc = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    if (!(h > 1e-300) || !std::isfinite(h)) return 1e100;
    const double dev = ctx.r[t] - mu;
    acc += 0.5 * (kLog2Pi + std::log(h) + dev * dev / h);
    h = omega + alpha * dev * dev + beta * h;
  }
  return acc / double(n);
}

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }
double logit(double p) { return std::log(p / (1.0 - p)); }

struct NaturalParams {
  double mu, omega, alpha, beta;
};

// theta = (mu, log omega, logit(persistence / cap), logit(beta share))
NaturalParams to_natural(const std::vector<double>& theta) {
  const double u = kPersistenceCap * sigmoid(theta[2]);
  const double v = sigmoid(theta[3]);
  return {theta[0], std::exp(theta[1]), u * (1.0 - v), u * v};
}

}  // namespace

GarchFit garch_fit(const core::ReturnSeries& returns) {
  const std::vector<double>& r = returns.returns();
  const std::size_t n = r.size();
  if (n < 20) throw SizeError("garch_fit: need at least 20 observations");

  double mean = 0.0;
  for (double x : r) mean += x;
  mean /= double(n);
  double var = 0.0;
  for (double x : r) var += (x - mean) * (x - mean);
  var /= double(n);
  if (!(var > 0.0))
    throw DegenerateError("garch_fit: constant returns carry no variance signal");

  const FitContext ctx{r, var};
  auto objective = [&ctx](const std::vector<double>& theta) {
    const NaturalParams p = to_natural(theta);
    return mean_negloglik(ctx, p.mu, p.omega, p.alpha, p.beta);
  };

  // Fixed multi-start grid over (persistence, beta share).
  const double starts[5][2] = {
      {0.90, 8.0 / 9.0}, {0.50, 0.50}, {0.98, 0.95}, {0.20, 0.25}, {0.97, 0.50}};
  detail::BfgsResult best;
  best.value = std::numeric_limits<double>::infinity();
  for (const auto& s : starts) {
    const double u = s[0], v = s[1];
    std::vector<double> theta0{mean, std::log(std::max(var * (1.0 - u), 1e-12)),
                               logit(u / kPersistenceCap), logit(v)};
    detail::BfgsResult res = detail::bfgs(objective, theta0, 1e-6, 300);
    if (res.value < best.value) best = std::move(res);
  }
  if (!std::isfinite(best.value))
    throw FitError("garch_fit: no start produced a finite likelihood");

  const NaturalParams p = to_natural(best.x);
  GarchFit fit;
  fit.spec.mu = p.mu;
  fit.spec.omega = p.omega;
  fit.spec.alpha = {p.alpha};
  fit.spec.beta = {p.beta};
  fit.log_likelihood = -best.value * double(n);
  fit.converged = best.converged;
  fit.iterations = best.iterations;
  fit.stationary = (p.alpha + p.beta) < 1.0 - 1e-4;

  // Observed-information standard errors in natural coordinates.
  auto natural_negloglik = [&ctx](const std::vector<double>& q) {
    if (!(q[1] > 0.0) || q[2] < 0.0 || q[3] < 0.0) return 1e100;
    return mean_negloglik(ctx, q[0], q[1], q[2], q[3]);
  };
  const std::vector<double> center{p.mu, p.omega, p.alpha, p.beta};
  std::vector<double> step(4);
  for (int i = 0; i < 4; ++i)
    step[std::size_t(i)] = std::max(1e-5 * std::abs(center[std::size_t(i)]), 1e-7);
  std::vector<double> hess(16, 0.0);
  const double f0 = natural_negloglik(center);
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      std::vector<double> x = center;
      double value;
      if (i == j) {
        x[std::size_t(i)] = center[std::size_t(i)] + step[std::size_t(i)];
        const double fp = natural_negloglik(x);
        x[std::size_t(i)] = center[std::size_t(i)] - step[std::size_t(i)];
        const double fm = natural_negloglik(x);
        value = (fp - 2.0 * f0 + fm) / (step[std::size_t(i)] * step[std::size_t(i)]);
      } else {
        const double hi = step[std::size_t(i)], hj = step[std::size_t(j)];
        x[std::size_t(i)] += hi;
        x[std::size_t(j)] += hj;
        const double fpp = natural_negloglik(x);
        x[std::size_t(j)] -= 2.0 * hj;
        const double fpm = natural_negloglik(x);
        x[std::size_t(i)] -= 2.0 * hi;
        const double fmm = natural_negloglik(x);
        x[std::size_t(j)] += 2.0 * hj;
        const double fmp = natural_negloglik(x);
        value = (fpp - fpm - fmp + fmm) / (4.0 * hi * hj);
      }
      hess[std::size_t(i * 4 + j)] = hess[std::size_t(j * 4 + i)] = value * double(n);
    }
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  fit.std_errors = {nan, nan, nan, nan};
  for (int i = 0; i < 4; ++i) {
    std::vector<double> e(4, 0.0);
    e[std::size_t(i)] = 1.0;
    std::vector<double> col;
    if (detail::solve_dense(hess, e, 4, col) && col[std::size_t(i)] > 0.0)
      fit.std_errors[std::size_t(i)] = std::sqrt(col[std::size_t(i)]);
  }
  return fit;
}

}  // namespace econolab::estimate

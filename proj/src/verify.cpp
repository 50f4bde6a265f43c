#include "econolab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <thread>

#include <json.hpp>

#include "econolab/action/hazard_mix.hpp"
#include "econolab/action/lagrangian.hpp"
#include "econolab/errors.hpp"
#include "econolab/estimate/garch.hpp"
#include "econolab/estimate/hill.hpp"
#include "econolab/estimate/jls_fit.hpp"
#include "econolab/estimate/regimes.hpp"
#include "econolab/random.hpp"
#include "econolab/simulate/ecology.hpp"
#include "econolab/simulate/execution.hpp"
#include "econolab/simulate/impact.hpp"
#include "econolab/simulate/jls.hpp"
#include "econolab/simulate/kinematic.hpp"
#include "econolab/version.hpp"

namespace econolab::verify {

namespace {

using core::RandomSource;

/// Runs chunk indices 0..chunk_count-1 over a small worker pool. Chunk
/// boundaries are fixed, so results never depend on the thread count.
void parallel_chunks(int chunk_count, int threads,
                     const std::function<void(int)>& run_chunk) {
  const int workers = std::max(1, std::min(threads, chunk_count));
  if (workers == 1) {
    for (int c = 0; c < chunk_count; ++c) run_chunk(c);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(std::size_t(workers));
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int c = next.fetch_add(1); c < chunk_count; c = next.fetch_add(1))
        run_chunk(c);
    });
  for (auto& t : pool) t.join();
}

class Timer {
 public:
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

VerifyCheck make_check(std::string name, std::string quantity, double target,
                       double measured, double tolerance, double seconds) {
  VerifyCheck check;
  check.name = std::move(name);
  check.quantity = std::move(quantity);
  check.target = target;
  check.measured = measured;
  check.tolerance = tolerance;
  check.pass = std::isfinite(measured) &&
               std::abs(measured - target) <= tolerance;
  check.wall_time_s = seconds;
  return check;
}

double ols_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = double(x.size());
  double xbar = 0.0, ybar = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    xbar += x[i];
    ybar += y[i];
  }
  xbar /= n;
  ybar /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - xbar) * (x[i] - xbar);
    sxy += (x[i] - xbar) * (y[i] - ybar);
  }
  return sxy / sxx;
}

/// Independent maximizer of the execution profit curve, used to cross-check
/// the closed-form optimum. Values are compared in extended precision: near
/// a quadratic maximum the argmax resolution scales as sqrt(eps), so plain
/// doubles bottom out near 4e-7 while 80-bit evaluation reaches ~1e-8.
double golden_section_argmax(const std::function<long double(long double)>& f,
                             double lo, double hi) {
  constexpr long double kInvPhi = 0.6180339887498948482L;
  long double a = lo, b = hi;
  long double x1 = b - kInvPhi * (b - a);
  long double x2 = a + kInvPhi * (b - a);
  long double f1 = f(x1), f2 = f(x2);
  while (b - a > 1e-10L * std::max(1.0, hi)) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    }
  }
  return double(0.5L * (a + b));
}

// ---- criterion blocks ------------------------------------------------------

void check_sqrt_impact(std::vector<VerifyCheck>& out) {
  Timer timer;
  const double volumes[] = {1.0, 4.0, 16.0, 64.0};
  std::vector<double> log_v, log_dp;
  double max_gap = 0.0;
  for (double v : volumes) {
    simulate::ExecutionProblem prob{100.0, 1.0, 1.0, v};
    const auto sol = simulate::optimal_execution(prob);
    log_v.push_back(std::log(v));
    log_dp.push_back(std::log(sol.dp_star));
    auto profit = [&prob](long double dp) {
      return (long double)(prob.V) *
             ((long double)(prob.M) -
              (long double)(prob.mu) * prob.a * prob.V / dp - dp);
    };
    const double numeric = golden_section_argmax(profit, 1e-6, prob.M);
    max_gap = std::max(max_gap, std::abs(numeric - sol.dp_star));
  }
  const double slope = ols_slope(log_v, log_dp);
  const double secs = timer.elapsed();
  out.push_back(make_check("impact_sqrt_scaling",
                           "log-log slope of optimal impact vs volume", 0.5,
                           slope, 1e-9, secs));
  out.push_back(make_check("impact_golden_agreement",
                           "max |closed form - golden section| over the volume grid",
                           0.0, max_gap, 1e-7, secs));
}

void check_volume_tail(std::vector<VerifyCheck>& out, std::uint64_t seed,
                       int threads) {
  constexpr int kSamples = 1'000'000;
  constexpr int kChunk = 65'536;
  const struct {
    const char* name;
    const char* label;
    double delta;
  } cases[] = {{"volume_tail_delta_1", "verify/volume_tail/1", 1.0},
               {"volume_tail_delta_half", "verify/volume_tail/0.5", 0.5}};
  for (const auto& c : cases) {
    Timer timer;
    std::vector<double> volumes(kSamples);
    const int chunks = (kSamples + kChunk - 1) / kChunk;
    const std::uint64_t base = core::hash_label(c.label);
    parallel_chunks(chunks, threads, [&](int chunk) {
      const int begin = chunk * kChunk;
      const int count = std::min(kChunk, kSamples - begin);
      RandomSource rng(seed, base + std::uint64_t(chunk));
      simulate::FundEcology eco{c.delta, 1.0, 1e6};
      const auto batch = simulate::fund_ecology_volumes(eco, count, rng);
      std::copy(batch.begin(), batch.end(), volumes.begin() + begin);
    });
    const auto est = estimate::hill_tail_exponent(volumes, 0.01);
    out.push_back(make_check(
        c.name, "Hill exponent of the simulated volume tail (top 1%)", 1.5,
        est.exponent, 0.1, timer.elapsed()));
  }
}

void check_volatility_split(std::vector<VerifyCheck>& out, std::uint64_t seed) {
  Timer timer;
  double worst = 0.0;
  for (double p : {0.5, 0.9, 0.99}) {
    simulate::TwoPopulationConfig cfg{p, 1.0, 1};
    RandomSource rng(seed, core::hash_label("verify/volatility_exact"));
    const auto res = simulate::two_population_ticks(cfg, rng);
    const double expected = p / (1.0 - p);
    worst = std::max(worst,
                     std::abs(res.sigma2_sq / res.sigma1_sq - expected) / expected);
  }
  out.push_back(make_check("volatility_ratio_exact",
                           "max relative error of sigma2^2/sigma1^2 vs p/(1-p)",
                           0.0, worst, 1e-12, timer.elapsed()));

  Timer mc_timer;
  simulate::TwoPopulationConfig cfg{0.9, 1.0, 1'000'000};
  RandomSource rng = RandomSource::for_operation(seed, "verify/volatility_mc");
  const auto res = simulate::two_population_ticks(cfg, rng);
  out.push_back(make_check("volatility_mc_variance",
                           "sample variance of 1e6 two-population ticks, p = 0.9",
                           9.0, res.sample_variance, 0.09, mc_timer.elapsed()));
}

void check_unit_persistence(std::vector<VerifyCheck>& out, std::uint64_t seed) {
  Timer timer;
  constexpr int kSteps = 10'000;
  const double c = 0.3, mu = 0.0, h0 = 0.04;
  RandomSource rng = RandomSource::for_operation(seed, "verify/unit_persistence");
  std::vector<double> rates(kSteps);
  for (double& r : rates) r = 0.1 * rng.normal();

  estimate::GarchSpec boundary;
  boundary.omega = 0.0;
  boundary.alpha = {c};
  boundary.beta = {1.0};
  boundary.mu = mu;
  const auto filtered = estimate::garch_variance_filter(boundary, rates, h0);

  double h = h0, max_gap = 0.0;
  for (int t = 0; t < kSteps; ++t) {
    h = estimate::least_action_predict(h, rates[std::size_t(t)], mu, c);
    max_gap = std::max(max_gap, std::abs(h - filtered[std::size_t(t) + 1]));
  }
  out.push_back(make_check(
      "unit_persistence_identity",
      "max |iterated action update - (0,c,1) variance recursion| over 1e4 steps",
      0.0, max_gap, 1e-12, timer.elapsed()));
}

void check_garch_roundtrip(std::vector<VerifyCheck>& out, std::uint64_t seed) {
  Timer timer;
  estimate::GarchSpec truth;
  truth.omega = 0.1;
  truth.alpha = {0.1};
  truth.beta = {0.8};
  truth.mu = 0.0;
  RandomSource rng = RandomSource::for_operation(seed, "verify/garch_roundtrip");
  const auto series = estimate::garch_simulate(truth, 50'000, rng);
  const auto fit = estimate::garch_fit(series);
  const double secs = timer.elapsed();

  const double est[3] = {fit.spec.omega, fit.spec.alpha[0], fit.spec.beta[0]};
  const double tru[3] = {truth.omega, truth.alpha[0], truth.beta[0]};
  const char* names[3] = {"garch_roundtrip_omega", "garch_roundtrip_alpha",
                          "garch_roundtrip_beta"};
  double worst_z = 0.0;
  for (int i = 0; i < 3; ++i) {
    out.push_back(make_check(names[i],
                             "recovered GARCH(1,1) coefficient, n = 5e4",
                             tru[i], est[i], 0.05, secs));
    // std_errors are ordered mu, omega, alpha, beta
    const double se = fit.std_errors[std::size_t(i) + 1];
    worst_z = std::max(worst_z, std::abs(est[i] - tru[i]) / se);
  }
  out.push_back(make_check("garch_roundtrip_zscore",
                           "max |estimate - truth| / std error over coefficients",
                           0.0, worst_z, 3.0, secs));
}

estimate::JlsParams noiseless_truth() {
  estimate::JlsParams p;
  p.A = 5.0;
  p.B = -1.0;
  p.C = 0.2;
  p.t_c = 100.0;
  p.m = 0.5;
  p.omega = 8.0;
  p.phi = 1.0;
  return p;
}

core::PriceSeries jls_series(const estimate::JlsParams& truth, double noise_sigma,
                             RandomSource* rng) {
  std::vector<double> times, prices;
  for (double t = 0.0; t <= 95.0 + 1e-9; t += 0.5) {
    double logp = estimate::jls_evaluate(truth, t);
    if (rng) logp += noise_sigma * rng->normal();
    times.push_back(t);
    prices.push_back(std::exp(logp));
  }
  return core::PriceSeries(std::move(times), std::move(prices));
}

void check_jls_recovery(std::vector<VerifyCheck>& out, std::uint64_t seed,
                        int threads) {
  const estimate::JlsParams truth = noiseless_truth();

  Timer clean_timer;
  estimate::JlsSearchGrid grid;
  grid.tc_min = 96.0;
  grid.tc_max = 110.0;
  const auto series = jls_series(truth, 0.0, nullptr);
  const auto fit = estimate::jls_fit(series, grid);
  const double clean_secs = clean_timer.elapsed();
  out.push_back(make_check("jls_noiseless_rmse",
                           "log-price rmse of the noiseless round-trip fit", 0.0,
                           fit.rmse, 1e-8, clean_secs));
  out.push_back(make_check("jls_noiseless_tc_error",
                           "critical-time error of the noiseless fit", 0.0,
                           std::abs(fit.params.t_c - truth.t_c), 0.5, clean_secs));

  Timer noisy_timer;
  constexpr int kSeeds = 20;
  estimate::JlsSearchGrid fast = grid;
  fast.tc_count = 29;
  fast.m_count = 10;
  fast.omega_count = 20;
  std::vector<int> success(kSeeds, 0);
  const std::uint64_t base = core::hash_label("verify/jls_noisy");
  parallel_chunks(kSeeds, threads, [&](int k) {
    RandomSource rng(seed, base + std::uint64_t(k));
    const auto noisy = jls_series(truth, 0.01, &rng);
    const auto f = estimate::jls_fit(noisy, fast);
    success[std::size_t(k)] =
        (std::abs(f.params.t_c - truth.t_c) <= 2.0 &&
         std::abs(f.params.m - truth.m) <= 0.05)
            ? 1
            : 0;
  });
  int total = 0;
  for (int s : success) total += s;
  out.push_back(make_check(
      "jls_noisy_recoveries",
      "fits recovering t_c within 2 and m within 0.05, out of 20 noisy runs",
      20.0, double(total), 2.0, noisy_timer.elapsed()));
}

void check_crash_rate(std::vector<VerifyCheck>& out, std::uint64_t seed,
                      int threads) {
  Timer timer;
  constexpr int kPaths = 10'000;
  constexpr int kChunk = 256;
  const int chunks = (kPaths + kChunk - 1) / kChunk;
  std::vector<int> crashed(std::size_t(chunks), 0);
  const std::uint64_t base = core::hash_label("verify/crash_rate");
  parallel_chunks(chunks, threads, [&](int chunk) {
    const int begin = chunk * kChunk;
    const int count = std::min(kChunk, kPaths - begin);
    int hits = 0;
    for (int i = 0; i < count; ++i) {
      RandomSource rng(seed, base + std::uint64_t(begin + i));
      simulate::JumpDiffusionConfig cfg{0.2, 0.0, 1.0, 100, 1.0};
      const auto res = simulate::jump_diffusion_path(
          cfg, [](double) { return 0.01; }, rng);
      if (res.crash_time) ++hits;
    }
    crashed[std::size_t(chunk)] = hits;
  });
  int total = 0;
  for (int h : crashed) total += h;
  out.push_back(make_check(
      "crash_fraction",
      "fraction of constant-hazard paths crashing within the horizon", 0.632,
      double(total) / double(kPaths), 0.015, timer.elapsed()));
}

void check_kinematic_regimes(std::vector<VerifyCheck>& out, std::uint64_t seed) {
  Timer timer;
  simulate::KinematicConfig cfg{1.0, 4.0, 2.0, 1'000'000};
  RandomSource rng = RandomSource::for_operation(seed, "verify/kinematic");
  const auto samples = simulate::kinematic_displacements(cfg, rng);

  const auto slopes = estimate::regime_slopes(samples, {0.01, 3.0});
  const double secs = timer.elapsed();
  out.push_back(make_check("kinematic_flat_slope",
                           "log-log density slope deep in the linear regime",
                           0.0, slopes.slopes[0], 0.05, secs));
  out.push_back(make_check("kinematic_sqrt_slope",
                           "log-log density slope deep in the quadratic regime",
                           -0.5, slopes.slopes[2], 0.05, secs));

  // Crossover: where the linear and quadratic displacement terms contribute
  // equally (dt = 2 v0 / accel) the local density slope equals -4/9 for any
  // (v0, accel); locate that slope crossing and map back to dt.
  Timer cross_timer;
  constexpr int kBins = 50;
  const double lo = 0.02, hi = 10.0;
  const double log_ratio = std::log(hi / lo);
  std::vector<double> counts(kBins, 0.0);
  for (double x : samples) {
    if (x < lo || x > hi) continue;
    int b = int(std::floor(double(kBins) * std::log(x / lo) / log_ratio));
    b = std::clamp(b, 0, kBins - 1);
    counts[std::size_t(b)] += 1.0;
  }
  std::vector<double> centers(kBins), log_density(kBins);
  for (int b = 0; b < kBins; ++b) {
    const double e0 = lo * std::exp(log_ratio * double(b) / kBins);
    const double e1 = lo * std::exp(log_ratio * double(b + 1) / kBins);
    centers[std::size_t(b)] = 0.5 * (std::log(e0) + std::log(e1));
    log_density[std::size_t(b)] =
        std::log(std::max(counts[std::size_t(b)], 0.5) / (e1 - e0));
  }
  constexpr int kWin = 4;
  const double threshold = -4.0 / 9.0;
  double crossing_log = centers.back();
  double prev_slope = 0.0;
  bool found = false;
  for (int b = kWin; b + kWin < kBins; ++b) {
    std::vector<double> xs, ys;
    for (int j = b - kWin; j <= b + kWin; ++j) {
      xs.push_back(centers[std::size_t(j)]);
      ys.push_back(log_density[std::size_t(j)]);
    }
    const double slope = ols_slope(xs, ys);
    if (b > kWin && !found && slope <= threshold && prev_slope > threshold) {
      const double frac = (threshold - prev_slope) / (slope - prev_slope);
      crossing_log =
          centers[std::size_t(b - 1)] +
          frac * (centers[std::size_t(b)] - centers[std::size_t(b - 1)]);
      found = true;
    }
    prev_slope = slope;
  }
  const double ds_cross = std::exp(crossing_log);
  const double dt_cross =
      (-cfg.v0 + std::sqrt(cfg.v0 * cfg.v0 + 2.0 * cfg.accel * ds_cross)) /
      cfg.accel;
  const double dt_star = 2.0 * cfg.v0 / cfg.accel;
  out.push_back(make_check("kinematic_crossover",
                           "horizon at which the density slope crosses -4/9",
                           dt_star, dt_cross, 0.2 * dt_star,
                           cross_timer.elapsed()));
}

void check_conservation(std::vector<VerifyCheck>& out) {
  Timer timer;
  // Log-spaced pairs restricted to b <= a: solutions then grow at most like
  // exp(t), keeping the conserved difference far from double-precision
  // cancellation over the full horizon. For b > a the growth exp(ωt) with
  // ωT > 15 erases the invariant from the representable digits, so those
  // pairs cannot be measured this way.
  const double pairs[9][2] = {{0.1, 0.1},  {0.316, 0.1}, {1.0, 0.1},
                              {1.0, 0.316}, {1.0, 1.0},   {3.16, 1.0},
                              {10.0, 1.0},  {10.0, 3.16}, {10.0, 10.0}};
  double worst = 0.0;
  for (const auto& p : pairs) {
    action::ActionCoefficients coef{p[0], p[1]};
    const auto traj = action::integrate_euler_lagrange(coef, 1.0, 0.0, 5.0, 1e-3);
    const auto c = action::conserved_quantity(coef, traj);
    for (double v : c)
      worst = std::max(worst, std::abs(v - c[0]) / std::abs(c[0]));
  }
  out.push_back(make_check("conservation_grid_drift",
                           "max relative drift of the first integral over 9 "
                           "(a,b) pairs, 5000 steps",
                           0.0, worst, 1e-6, timer.elapsed()));

  Timer exp_timer;
  action::ActionCoefficients unit{1.0, 1.0};
  const auto exp_traj = action::integrate_euler_lagrange(unit, 1.0, 1.0, 5.0, 1e-3);
  const auto exp_c = action::conserved_quantity(unit, exp_traj);
  double exp_worst = 0.0;
  for (double v : exp_c) exp_worst = std::max(exp_worst, std::abs(v));
  out.push_back(make_check("conservation_exp_zero",
                           "max |first integral| on the exponential solution",
                           0.0, exp_worst, 1e-6, exp_timer.elapsed()));

  Timer cosh_timer;
  action::ActionCoefficients stiff{1.0, 4.0};
  const auto cosh_traj =
      action::integrate_euler_lagrange(stiff, 1.0, 0.0, 2.0, 1e-3);
  const auto cosh_c = action::conserved_quantity(stiff, cosh_traj);
  double cosh_worst = 0.0;
  for (double v : cosh_c) cosh_worst = std::max(cosh_worst, std::abs(v + 2.0));
  out.push_back(make_check("conservation_cosh_constant",
                           "max |first integral + 2| on the cosh solution", 0.0,
                           cosh_worst, 1e-6, cosh_timer.elapsed()));
}

void check_log_periodicity(std::vector<VerifyCheck>& out) {
  Timer timer;
  action::HazardMix mix{1.0, 0.0, 1.0, 0.5, 2.0 * 3.14159265358979323846};
  action::DeltaMap map{action::DeltaKind::Log, 1.0, 10.0};

  // Uniform grid in ln(tau) so every oscillation is equally resolved.
  constexpr int kPoints = 5000;
  const double log_lo = std::log(0.05), log_hi = std::log(8.0);
  std::vector<double> times(kPoints), taus(kPoints);
  for (int i = 0; i < kPoints; ++i) {
    const double lt = log_hi + (log_lo - log_hi) * double(i) / double(kPoints - 1);
    taus[std::size_t(i)] = std::exp(lt);
    times[std::size_t(i)] = map.t_c - taus[std::size_t(i)];
  }
  const auto profile = action::hazard_ratio_profile(mix, map, times);

  std::vector<double> peak_taus;
  for (int i = 1; i + 1 < kPoints; ++i)
    if (profile[std::size_t(i)] > profile[std::size_t(i) - 1] &&
        profile[std::size_t(i)] > profile[std::size_t(i) + 1])
      peak_taus.push_back(taus[std::size_t(i)]);

  double worst = 1.0;  // fails if fewer than two maxima appear
  if (peak_taus.size() >= 2) {
    worst = 0.0;
    const double expected = std::exp(2.0 * 3.14159265358979323846 / mix.omega);
    for (std::size_t i = 0; i + 1 < peak_taus.size(); ++i) {
      const double ratio = peak_taus[i] / peak_taus[i + 1];
      worst = std::max(worst, std::abs(ratio - expected) / expected);
    }
  }
  out.push_back(make_check(
      "log_periodic_spacing",
      "max relative error of successive peak-tau ratios vs exp(2 pi / omega)",
      0.0, worst, 0.01, timer.elapsed()));
}

void check_tail_calibration(std::vector<VerifyCheck>& out, std::uint64_t seed) {
  Timer timer;
  constexpr int kDraws = 100'000;
  RandomSource rng = RandomSource::for_operation(seed, "verify/hill_pareto3");
  std::vector<double> draws(kDraws);
  for (double& x : draws) x = std::pow(rng.uniform_open01(), -1.0 / 3.0);
  const auto est = estimate::hill_tail_exponent(draws, 0.01);
  out.push_back(make_check("hill_pareto_3",
                           "Hill exponent of 1e5 heavy-tail draws (top 1%)", 3.0,
                           est.exponent, 0.2, timer.elapsed()));

  Timer exact_timer;
  constexpr int kGrid = 5000;
  std::vector<double> quantiles(kGrid);
  for (int i = 1; i <= kGrid; ++i)
    quantiles[std::size_t(i - 1)] =
        std::pow(double(i) / double(kGrid), -1.0 / 1.5);
  const auto exact = estimate::hill_tail_exponent(quantiles, 0.1);
  out.push_back(make_check("hill_exact_quantiles",
                           "Hill exponent on the exact power-law quantile grid",
                           1.5, exact.exponent, 0.05, exact_timer.elapsed()));
}

}  // namespace

VerifyReport run_verification(std::uint64_t seed, int threads) {
  if (threads < 1) throw DomainError("verify: threads must be >= 1");
  VerifyReport report;
  report.version = kVersion;
  report.seed = seed;
  report.threads = threads;

  check_sqrt_impact(report.checks);
  check_volume_tail(report.checks, seed, threads);
  check_volatility_split(report.checks, seed);
  check_unit_persistence(report.checks, seed);
  check_garch_roundtrip(report.checks, seed);
  check_jls_recovery(report.checks, seed, threads);
  check_crash_rate(report.checks, seed, threads);
  check_kinematic_regimes(report.checks, seed);
  check_conservation(report.checks);
  check_log_periodicity(report.checks);
  check_tail_calibration(report.checks, seed);

  report.overall_pass = true;
  for (const auto& check : report.checks)
    report.overall_pass = report.overall_pass && check.pass;
  return report;
}

std::string report_to_json(const VerifyReport& report) {
  nlohmann::ordered_json j;
  j["version"] = report.version;
  j["seed"] = report.seed;
  j["threads"] = report.threads;
  j["overall_pass"] = report.overall_pass;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& check : report.checks) {
    nlohmann::ordered_json c;
    c["name"] = check.name;
    c["quantity"] = check.quantity;
    c["target"] = check.target;
    c["measured"] = check.measured;
    c["tolerance"] = check.tolerance;
    c["pass"] = check.pass;
    c["wall_time_s"] = check.wall_time_s;
    j["checks"].push_back(c);
  }
  return j.dump(2) + "\n";
}

}  // namespace econolab::verify

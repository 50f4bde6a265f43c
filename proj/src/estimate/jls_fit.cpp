#include "econolab/estimate/jls_fit.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "econolab/errors.hpp"
#include "optim.hpp"

namespace econolab::estimate {

void JlsParams::validate() const {
  if (!(m > 0.0 && m < 1.0)) throw ConstraintError("jls params: m must be in (0,1)");
  if (!(omega > 0.0)) throw ConstraintError("jls params: omega must be > 0");
  if (!std::isfinite(A) || !std::isfinite(B) || !std::isfinite(C))
    throw ConstraintError("jls params: amplitudes must be finite");
}

double jls_evaluate(const JlsParams& params, double t) {
  params.validate();
  if (!(t < params.t_c)) throw DomainError("jls_evaluate: t must be below t_c");
  const double tau = params.t_c - t;
  const double power = std::pow(tau, params.m);
  return params.A + params.B * power +
         params.C * power * std::cos(params.omega * std::log(tau) - params.phi);
}

void JlsSearchGrid::validate(double last_time) const {
  if (!(tc_min > last_time))
    throw DomainError("jls grid: t_c search must start strictly after the data");
  if (!(tc_max >= tc_min)) throw DomainError("jls grid: tc_max < tc_min");
  if (!(m_min > 0.0 && m_max < 1.0 && m_min <= m_max))
    throw DomainError("jls grid: m range must lie inside (0,1)");
  if (!(omega_min > 0.0 && omega_min <= omega_max))
    throw DomainError("jls grid: omega range must be positive");
  if (tc_count < 1 || m_count < 1 || omega_count < 1)
    throw DomainError("jls grid: counts must be >= 1");
}

namespace {

struct LinearSolve {
  double coef[4];  // A, B, C cos(phi), C sin(phi)
  double rmse;
  bool ok;
};

// Least squares on the four trend features via modified Gram-Schmidt with a
// reorthogonalization pass; explicit residual so the reported rmse is not
// limited by normal-equation conditioning.
LinearSolve solve_linear(const std::vector<double>& times,
                         const std::vector<double>& logp, double tc, double m,
                         double omega) {
  const std::size_t n = times.size();
  std::vector<double> cols[4];
  for (auto& c : cols) c.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double tau = tc - times[i];
    const double power = std::pow(tau, m);
    const double angle = omega * std::log(tau);
    cols[0][i] = 1.0;
    cols[1][i] = power;
    cols[2][i] = power * std::cos(angle);
    cols[3][i] = power * std::sin(angle);
  }

  double q[4][4] = {};  // R factor
  std::vector<double> basis[4];
  for (int j = 0; j < 4; ++j) {
    basis[j] = cols[j];
    double norm0 = 0.0;
    for (double v : cols[j]) norm0 += v * v;
    norm0 = std::sqrt(norm0);
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < j; ++k) {
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += basis[k][i] * basis[j][i];
        if (pass == 0) q[k][j] = dot; else q[k][j] += dot;
        for (std::size_t i = 0; i < n; ++i) basis[j][i] -= dot * basis[k][i];
      }
    }
    double norm = 0.0;
    for (double v : basis[j]) norm += v * v;
    norm = std::sqrt(norm);
    if (!(norm > 1e-10 * (norm0 + 1e-300))) return {{0, 0, 0, 0}, 0.0, false};
    q[j][j] = norm;
    for (std::size_t i = 0; i < n; ++i) basis[j][i] /= norm;
  }

  double z[4];
  for (int j = 0; j < 4; ++j) {
    double dot = 0.0;
    for (std::size_t i = 0; i < n; ++i) dot += basis[j][i] * logp[i];
    z[j] = dot;
  }
  LinearSolve out{};
  for (int j = 3; j >= 0; --j) {
    double sum = z[j];
    for (int k = j + 1; k < 4; ++k) sum -= q[j][k] * out.coef[k];
    out.coef[j] = sum / q[j][j];
  }

  double ssr = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double fitted = out.coef[0] + out.coef[1] * cols[1][i] +
                          out.coef[2] * cols[2][i] + out.coef[3] * cols[3][i];
    const double resid = logp[i] - fitted;
    ssr += resid * resid;
  }
  out.rmse = std::sqrt(ssr / double(n));
  out.ok = true;
  return out;
}

double grid_value(double lo, double hi, int count, int index) {
  if (count == 1) return lo;
  return lo + (hi - lo) * double(index) / double(count - 1);
}

}  // namespace

JlsFit jls_fit(const core::PriceSeries& series, const JlsSearchGrid& grid) {
  if (series.size() < 30) throw SizeError("jls_fit: need at least 30 observations");
  const double t_last = series.times().back();
  grid.validate(t_last);

  const std::vector<double>& times = series.times();
  std::vector<double> logp(series.size());
  for (std::size_t i = 0; i < series.size(); ++i)
    logp[i] = std::log(series.prices()[i]);

  double best_rmse = std::numeric_limits<double>::infinity();
  double best_tc = 0.0, best_m = 0.0, best_omega = 0.0;
  bool any = false;
  for (int it = 0; it < grid.tc_count; ++it) {
    const double tc = grid_value(grid.tc_min, grid.tc_max, grid.tc_count, it);
    for (int im = 0; im < grid.m_count; ++im) {
      const double m = grid_value(grid.m_min, grid.m_max, grid.m_count, im);
      for (int iw = 0; iw < grid.omega_count; ++iw) {
        const double omega =
            grid_value(grid.omega_min, grid.omega_max, grid.omega_count, iw);
        const LinearSolve sol = solve_linear(times, logp, tc, m, omega);
        if (!sol.ok) continue;
        any = true;
        if (sol.rmse < best_rmse) {
          best_rmse = sol.rmse;
          best_tc = tc;
          best_m = m;
          best_omega = omega;
        }
      }
    }
  }
  if (!any) throw FitError("jls_fit: every grid point was rank deficient");

  // Local polish of the nonlinear triple, bounds enforced by penalty.
  const double tc_floor = t_last + 1e-9 * std::max(1.0, std::abs(t_last));
  auto objective = [&](const std::vector<double>& x) {
    const double tc = x[0], m = x[1], omega = x[2];
    if (!(tc > tc_floor) || !(m > 0.005 && m < 0.995) || !(omega > 0.05))
      return std::numeric_limits<double>::infinity();
    const LinearSolve sol = solve_linear(times, logp, tc, m, omega);
    return sol.ok ? sol.rmse : std::numeric_limits<double>::infinity();
  };

  std::vector<double> x{best_tc, best_m, best_omega};
  std::vector<double> step{
      std::max((grid.tc_max - grid.tc_min) / std::max(grid.tc_count - 1, 1), 1e-3) * 0.5,
      std::max((grid.m_max - grid.m_min) / std::max(grid.m_count - 1, 1), 1e-4) * 0.5,
      std::max((grid.omega_max - grid.omega_min) / std::max(grid.omega_count - 1, 1),
               1e-3) *
          0.5};
  auto polished = detail::nelder_mead(objective, x, step, 600, 1e-15);
  std::vector<double> fine_step{step[0] * 0.01, step[1] * 0.01, step[2] * 0.01};
  polished = detail::nelder_mead(objective, polished.x, fine_step, 600, 1e-16);

  const LinearSolve sol =
      solve_linear(times, logp, polished.x[0], polished.x[1], polished.x[2]);
  if (!sol.ok) throw FitError("jls_fit: polish landed on a rank-deficient point");

  JlsFit fit;
  fit.params.t_c = polished.x[0];
  fit.params.m = polished.x[1];
  fit.params.omega = polished.x[2];
  fit.params.A = sol.coef[0];
  fit.params.B = sol.coef[1];
  fit.params.C = std::hypot(sol.coef[2], sol.coef[3]);
  fit.params.phi = std::atan2(sol.coef[3], sol.coef[2]);
  if (fit.params.phi < 0.0) fit.params.phi += 2.0 * 3.14159265358979323846;
  fit.rmse = sol.rmse;
  fit.search_grid_size = {grid.tc_count, grid.m_count, grid.omega_count};
  return fit;
}

}  // namespace econolab::estimate

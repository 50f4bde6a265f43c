#pragma once

// Internal dense optimizers shared by the fitting routines. Deterministic:
// no randomized restarts, fixed iteration orders.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace econolab::estimate::detail {

using Objective = std::function<double(const std::vector<double>&)>;

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
};

/// Standard Nelder-Mead simplex minimization with fixed coefficients
/// (reflection 1, expansion 2, contraction 0.5, shrink 0.5).
inline NelderMeadResult nelder_mead(const Objective& f,
                                    const std::vector<double>& x0,
                                    const std::vector<double>& step,
                                    int max_iter = 400, double ftol = 1e-13) {
  const std::size_t dim = x0.size();
  std::vector<std::vector<double>> pts(dim + 1, x0);
  for (std::size_t i = 0; i < dim; ++i) pts[i + 1][i] += step[i];
  std::vector<double> vals(dim + 1);
  for (std::size_t i = 0; i <= dim; ++i) vals[i] = f(pts[i]);

  int iter = 0;
  for (; iter < max_iter; ++iter) {
    // Order simplex: best first, worst last.
    std::vector<std::size_t> order(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    std::vector<std::vector<double>> sorted_pts(dim + 1);
    std::vector<double> sorted_vals(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) {
      sorted_pts[i] = pts[order[i]];
      sorted_vals[i] = vals[order[i]];
    }
    pts = std::move(sorted_pts);
    vals = std::move(sorted_vals);

    if (std::abs(vals[dim] - vals[0]) <=
        ftol * (std::abs(vals[0]) + std::abs(vals[dim]) + 1e-300))
      break;

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) centroid[j] += pts[i][j] / double(dim);

    auto blend = [&](double coef) {
      std::vector<double> x(dim);
      for (std::size_t j = 0; j < dim; ++j)
        x[j] = centroid[j] + coef * (pts[dim][j] - centroid[j]);
      return x;
    };

    std::vector<double> reflected = blend(-1.0);
    const double fr = f(reflected);
    if (fr < vals[0]) {
      std::vector<double> expanded = blend(-2.0);
      const double fe = f(expanded);
      if (fe < fr) {
        pts[dim] = std::move(expanded);
        vals[dim] = fe;
      } else {
        pts[dim] = std::move(reflected);
        vals[dim] = fr;
      }
    } else if (fr < vals[dim - 1]) {
      pts[dim] = std::move(reflected);
      vals[dim] = fr;
    } else {
      std::vector<double> contracted = blend(fr < vals[dim] ? -0.5 : 0.5);
      const double fc = f(contracted);
      if (fc < std::min(fr, vals[dim])) {
        pts[dim] = std::move(contracted);
        vals[dim] = fc;
      } else {
        for (std::size_t i = 1; i <= dim; ++i) {
          for (std::size_t j = 0; j < dim; ++j)
            pts[i][j] = pts[0][j] + 0.5 * (pts[i][j] - pts[0][j]);
          vals[i] = f(pts[i]);
        }
      }
    }
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i <= dim; ++i)
    if (vals[i] < vals[best]) best = i;
  return {pts[best], vals[best], iter};
}

/// Central-difference gradient.
inline std::vector<double> fd_gradient(const Objective& f,
                                       const std::vector<double>& x,
                                       double h = 1e-6) {
  std::vector<double> g(x.size());
  std::vector<double> xp = x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    xp[i] = xi + h;
    const double fp = f(xp);
    xp[i] = xi - h;
    const double fm = f(xp);
    xp[i] = xi;
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

struct BfgsResult {
  std::vector<double> x;
  double value = 0.0;
  std::vector<double> gradient;
  int iterations = 0;
  bool converged = false;
};

/// BFGS with Armijo backtracking and finite-difference gradients. Converges
/// when the gradient infinity-norm drops below grad_tol.
inline BfgsResult bfgs(const Objective& f, const std::vector<double>& x0,
                       double grad_tol = 1e-6, int max_iter = 400,
                       double fd_step = 1e-6) {
  const std::size_t dim = x0.size();
  std::vector<double> x = x0;
  double fx = f(x);
  std::vector<double> g = fd_gradient(f, x, fd_step);

  // Inverse-Hessian approximation, dense row-major identity at start.
  std::vector<double> hinv(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) hinv[i * dim + i] = 1.0;

  auto gnorm = [](const std::vector<double>& v) {
    double m = 0.0;
    for (double a : v) m = std::max(m, std::abs(a));
    return m;
  };

  BfgsResult result;
  int iter = 0;
  for (; iter < max_iter; ++iter) {
    if (gnorm(g) < grad_tol) {
      result.converged = true;
      break;
    }

    std::vector<double> dir(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) dir[i] -= hinv[i * dim + j] * g[j];

    double slope = 0.0;
    for (std::size_t i = 0; i < dim; ++i) slope += dir[i] * g[i];
    if (!(slope < 0.0)) {
      // Reset to steepest descent if the metric lost positive-definiteness.
      for (std::size_t i = 0; i < dim; ++i) {
        dir[i] = -g[i];
        for (std::size_t j = 0; j < dim; ++j)
          hinv[i * dim + j] = (i == j) ? 1.0 : 0.0;
      }
      slope = 0.0;
      for (std::size_t i = 0; i < dim; ++i) slope += dir[i] * g[i];
      if (!(slope < 0.0)) break;
    }

    double t = 1.0;
    std::vector<double> xn(dim);
    double fn = fx;
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls) {
      for (std::size_t i = 0; i < dim; ++i) xn[i] = x[i] + t * dir[i];
      fn = f(xn);
      if (std::isfinite(fn) && fn <= fx + 1e-4 * t * slope) {
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) break;

    std::vector<double> gn = fd_gradient(f, xn, fd_step);
    std::vector<double> s(dim), y(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      s[i] = xn[i] - x[i];
      y[i] = gn[i] - g[i];
    }
    double sy = 0.0;
    for (std::size_t i = 0; i < dim; ++i) sy += s[i] * y[i];
    if (sy > 1e-12) {
      const double rho = 1.0 / sy;
      // hinv = (I - rho s y^T) hinv (I - rho y s^T) + rho s s^T
      std::vector<double> hy(dim, 0.0);
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) hy[i] += hinv[i * dim + j] * y[j];
      double yhy = 0.0;
      for (std::size_t i = 0; i < dim; ++i) yhy += y[i] * hy[i];
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
          hinv[i * dim + j] += (sy + yhy) * rho * rho * s[i] * s[j] -
                               rho * (hy[i] * s[j] + s[i] * hy[j]);
    }
    x = std::move(xn);
    fx = fn;
    g = std::move(gn);
  }

  result.x = std::move(x);
  result.value = fx;
  result.gradient = std::move(g);
  result.iterations = iter;
  return result;
}

/// Solves the small dense symmetric system A x = b in place via Gaussian
/// elimination with partial pivoting; returns false if A is singular.
inline bool solve_dense(std::vector<double> a, std::vector<double> b,
                        std::size_t n, std::vector<double>& x) {
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
    if (std::abs(a[pivot * n + col]) < 1e-300) return false;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c)
        std::swap(a[col * n + c], a[pivot * n + c]);
      std::swap(b[col], b[pivot]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double factor = a[r * n + col] / a[col * n + col];
      for (std::size_t c = col; c < n; ++c) a[r * n + c] -= factor * a[col * n + c];
      b[r] -= factor * b[col];
    }
  }
  x.assign(n, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    double sum = b[i];
    for (std::size_t j = i + 1; j < n; ++j) sum -= a[i * n + j] * x[j];
    x[i] = sum / a[i * n + i];
  }
  return true;
}

}  // namespace econolab::estimate::detail

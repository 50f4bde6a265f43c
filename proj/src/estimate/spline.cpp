#include "econolab/estimate/spline.hpp"

#include <algorithm>
#include <cmath>

#include "econolab/errors.hpp"

namespace econolab::estimate {

CubicSpline::CubicSpline(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  const std::size_t n = xs_.size();
  if (n != ys_.size()) throw SizeError("spline: mismatched knot arrays");
  if (n < 3) throw SizeError("spline: need at least 3 knots");
  for (std::size_t i = 1; i < n; ++i)
    if (!(xs_[i] > xs_[i - 1]))
      throw OrderingError("spline: knots must be strictly increasing");

  // Tridiagonal system for the interior second derivatives; natural
  // boundaries pin the first and last to zero.
  second_.assign(n, 0.0);
  std::vector<double> diag(n, 0.0), rhs(n, 0.0), upper(n, 0.0);
  diag[0] = 1.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double h_lo = xs_[i] - xs_[i - 1];
    const double h_hi = xs_[i + 1] - xs_[i];
    diag[i] = 2.0 * (h_lo + h_hi);
    upper[i] = h_hi;
    rhs[i] = 6.0 * ((ys_[i + 1] - ys_[i]) / h_hi - (ys_[i] - ys_[i - 1]) / h_lo);
  }
  diag[n - 1] = 1.0;

  // Thomas sweep (lower diagonal equals the previous row's h_lo).
  for (std::size_t i = 2; i + 1 < n; ++i) {
    const double h_lo = xs_[i] - xs_[i - 1];
    const double w = h_lo / diag[i - 1];
    diag[i] -= w * upper[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  for (std::size_t i = n - 1; i-- > 1;)
    second_[i] = (rhs[i] - upper[i] * second_[i + 1]) / diag[i];
}

double CubicSpline::operator()(double x) const {
  if (!(x >= xs_.front() && x <= xs_.back()))
    throw DomainError("spline: evaluation outside the knot span");
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  std::size_t hi = std::min<std::size_t>(std::size_t(it - xs_.begin()), xs_.size() - 1);
  if (hi == 0) hi = 1;
  const std::size_t lo = hi - 1;
  const double h = xs_[hi] - xs_[lo];
  const double a = (xs_[hi] - x) / h;
  const double b = (x - xs_[lo]) / h;
  return a * ys_[lo] + b * ys_[hi] +
         ((a * a * a - a) * second_[lo] + (b * b * b - b) * second_[hi]) *
             (h * h) / 6.0;
}

double CubicSpline::interval_minimum(std::size_t i) const {
  const double x0 = xs_[i], x1 = xs_[i + 1];
  const double h = x1 - x0;
  const double m0 = second_[i], m1 = second_[i + 1];
  double lo = std::min(ys_[i], ys_[i + 1]);

  // d/du of the piece in the normalized coordinate u = (x - x0) / h.
  const double qa = 0.5 * h * h * (m1 - m0);
  const double qb = h * h * m0;
  const double qc = (ys_[i + 1] - ys_[i]) - h * h * (2.0 * m0 + m1) / 6.0;

  auto consider = [&](double u) {
    if (u > 0.0 && u < 1.0) lo = std::min(lo, (*this)(x0 + u * h));
  };
  if (std::abs(qa) < 1e-300) {
    if (std::abs(qb) > 1e-300) consider(-qc / qb);
  } else {
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc >= 0.0) {
      const double root = std::sqrt(disc);
      consider((-qb + root) / (2.0 * qa));
      consider((-qb - root) / (2.0 * qa));
    }
  }
  return lo;
}

VarianceTriple::VarianceTriple(std::vector<double> knot_times,
                               std::vector<double> h1_values,
                               std::function<double(double)> h0)
    : knot_times_(std::move(knot_times)),
      h1_values_(std::move(h1_values)),
      spline_(knot_times_, h1_values_),
      h0_(std::move(h0)) {
  for (double v : h1_values_)
    if (!(v >= 0.0)) throw DomainError("variance triple: h1 values must be >= 0");
  for (std::size_t i = 0; i < spline_.interval_count(); ++i)
    if (spline_.interval_minimum(i) < 0.0) {
      clamped_ = true;
      break;
    }
}

double VarianceTriple::h2(double t) const {
  const double v = spline_(t);
  return v < 0.0 ? 0.0 : v;
}

double VarianceTriple::h0(double t) const { return h0_ ? h0_(t) : h2(t); }

VarianceTriple interpolate_variance(std::vector<double> knot_times,
                                    std::vector<double> h1_values,
                                    std::function<double(double)> h0) {
  return VarianceTriple(std::move(knot_times), std::move(h1_values),
                        std::move(h0));
}

}  // namespace econolab::estimate

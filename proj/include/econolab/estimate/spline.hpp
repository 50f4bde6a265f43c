#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace econolab::estimate {

/// Natural cubic spline (second derivative zero at both ends). Evaluation is
/// restricted to the knot span.
class CubicSpline {
 public:
  CubicSpline(std::vector<double> xs, std::vector<double> ys);

  double operator()(double x) const;
  double t_min() const { return xs_.front(); }
  double t_max() const { return xs_.back(); }
  std::size_t interval_count() const { return xs_.size() - 1; }

  /// Exact minimum of the cubic piece on [x_i, x_{i+1}]: endpoint values and
  /// the interior extrema, which are roots of a quadratic.
  double interval_minimum(std::size_t i) const;

 private:
  std::vector<double> xs_;
  std::vector<double> ys_;
  std::vector<double> second_;  // second derivatives at knots
};

/// The three variance views used side by side: an optional continuous
/// reference h0, the discrete per-interval values h1, and the quasicontinuous
/// interpolant h2 that matches h1 exactly at every knot.
class VarianceTriple {
 public:
  VarianceTriple(std::vector<double> knot_times, std::vector<double> h1_values,
                 std::function<double(double)> h0 = {});

  const std::vector<double>& knot_times() const { return knot_times_; }
  const std::vector<double>& h1() const { return h1_values_; }

  /// Interpolated variance; negative spline excursions between nonnegative
  /// knots are clamped to zero and reported via clamped().
  double h2(double t) const;

  /// Continuous reference model if one was supplied, else the interpolant.
  double h0(double t) const;
  bool has_reference() const { return bool(h0_); }

  /// True when the interpolant dips below zero anywhere between knots.
  bool clamped() const { return clamped_; }

 private:
  std::vector<double> knot_times_;
  std::vector<double> h1_values_;
  CubicSpline spline_;
  std::function<double(double)> h0_;
  bool clamped_ = false;
};

/// Builds the quasicontinuous interpolant through (knot_times, h1_values).
/// Needs at least 3 ordered knots and nonnegative values.
VarianceTriple interpolate_variance(std::vector<double> knot_times,
                                    std::vector<double> h1_values,
                                    std::function<double(double)> h0 = {});

}  // namespace econolab::estimate

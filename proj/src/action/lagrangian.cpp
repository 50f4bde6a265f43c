#include "econolab/action/lagrangian.hpp"

#include <cmath>

#include "econolab/errors.hpp"

namespace econolab::action {

void ActionCoefficients::validate() const {
  if (!(a > 0.0) || !(b > 0.0))
    throw ConstraintError("action coefficients: a and b must be > 0");
}

double lagrangian_value(const ActionCoefficients& coef, double h, double hdot) {
  coef.validate();
  return 0.5 * coef.a * hdot * hdot + 0.5 * coef.b * h * h;
}

Trajectory integrate_euler_lagrange(const ActionCoefficients& coef, double h0,
                                    double hdot0, double t_end, double step) {
  coef.validate();
  if (!(t_end > 0.0)) throw DomainError("integrate: t_end must be > 0");
  if (!(step > 0.0) || step > t_end / 10.0)
    throw DomainError("integrate: need 0 < step <= t_end / 10");

  const double rate = coef.b / coef.a;
  const auto n = std::size_t(std::llround(t_end / step));

  Trajectory traj;
  traj.times.resize(n + 1);
  traj.h_values.resize(n + 1);
  traj.hdot_values.resize(n + 1);
  traj.times[0] = 0.0;
  traj.h_values[0] = h0;
  traj.hdot_values[0] = hdot0;

  double h = h0, v = hdot0;
  for (std::size_t i = 0; i < n; ++i) {
    const double k1h = v, k1v = rate * h;
    const double k2h = v + 0.5 * step * k1v, k2v = rate * (h + 0.5 * step * k1h);
    const double k3h = v + 0.5 * step * k2v, k3v = rate * (h + 0.5 * step * k2h);
    const double k4h = v + step * k3v, k4v = rate * (h + step * k3h);
    h += step / 6.0 * (k1h + 2.0 * k2h + 2.0 * k3h + k4h);
    v += step / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    traj.times[i + 1] = double(i + 1) * step;
    traj.h_values[i + 1] = h;
    traj.hdot_values[i + 1] = v;
  }
  return traj;
}

std::vector<double> conserved_quantity(const ActionCoefficients& coef,
                                       const Trajectory& traj) {
  coef.validate();
  if (traj.h_values.empty())
    throw SizeError("conserved_quantity: empty trajectory");
  std::vector<double> c(traj.h_values.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double h = traj.h_values[i];
    const double v = traj.hdot_values[i];
    c[i] = 0.5 * coef.a * v * v - 0.5 * coef.b * h * h;
  }
  return c;
}

}  // namespace econolab::action

#include "econolab/action/scaling.hpp"

#include <cmath>

#include "econolab/errors.hpp"

namespace econolab::action {

void ScalingLaw::validate() const {
  if (!(amplitude_A > 0.0)) throw ConstraintError("scaling law: amplitude must be > 0");
  if (!(xi != xi_r)) throw ConstraintError("scaling law: xi must differ from xi_r");
  if (!(field_h >= 0.0)) throw ConstraintError("scaling law: field must be >= 0");
}

double ScalingLaw::crossover_scale() const {
  validate();
  if (!(field_h > 0.0))
    throw DomainError("scaling law: crossover undefined for zero field");
  return std::pow(field_h, -1.0 / (xi - xi_r));
}

double scaling_order_parameter(const ScalingLaw& law, double dS) {
  law.validate();
  if (!(dS > 0.0)) throw DomainError("scaling_order_parameter: dS must be > 0");
  const double z = law.field_h * std::pow(dS, law.xi - law.xi_r);
  const double f = std::pow(1.0 + z * z, 0.5 * law.beta_exp);
  return law.amplitude_A * std::pow(dS, law.xi_r) * f;
}

}  // namespace econolab::action

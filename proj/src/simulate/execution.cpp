#include "econolab/simulate/execution.hpp"

#include <cmath>

#include "econolab/errors.hpp"

namespace econolab::simulate {

void ExecutionProblem::validate() const {
  if (!(M > 0.0) || !(mu > 0.0) || !(a > 0.0) || !(V > 0.0))
    throw DomainError("optimal_execution: M, mu, a, V must all be positive");
}

ExecutionSolution optimal_execution(const ExecutionProblem& prob) {
  prob.validate();
  ExecutionSolution sol;
  sol.dp_star = std::sqrt(prob.mu * prob.a * prob.V);
  sol.T_star = prob.a * prob.V / sol.dp_star;
  sol.N_star = sol.T_star;
  sol.B_star =
      prob.V * (prob.M - prob.mu * prob.a * prob.V / sol.dp_star - sol.dp_star);
  return sol;
}

}  // namespace econolab::simulate

#pragma once

namespace econolab::simulate {

/// Large-trader execution inputs: mispricing M decaying at rate mu, impact
/// time constant a (waiting time T = a * V / dp), and target volume V.
struct ExecutionProblem {
  double M = 1.0;
  double mu = 1.0;
  double a = 1.0;
  double V = 1.0;

  void validate() const;
};

struct ExecutionSolution {
  double dp_star = 0.0;  // profit-maximizing price impact, sqrt(mu * a * V)
  double T_star = 0.0;   // execution time a * V / dp_star
  double N_star = 0.0;   // trade count proxy, proportional to T_star
  double B_star = 0.0;   // maximized profit V * (M - 2 * sqrt(mu * a * V))
};

/// Maximizes B(dp) = V * (M - mu * a * V / dp - dp) over dp > 0. The interior
/// stationary point dp* = sqrt(mu * a * V) gives the square-root dependence
/// of impact on volume; T and N inherit the same square-root scaling. B_star
/// is positive only when M > 2 * sqrt(mu * a * V); that condition is the
/// caller's to check, the optimum is returned either way.
ExecutionSolution optimal_execution(const ExecutionProblem& prob);

}  // namespace econolab::simulate

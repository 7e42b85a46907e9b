#pragma once

#include <Eigen/Core>

#include "lfpscsc/lfp_model.hpp"
#include "lfpscsc/linear_program.hpp"

namespace lfpscsc {

// Image of a primal point under t = 1/(d.x + beta), x_bar = t x,
// u_bar = b t - A x_bar.
struct TransformedPoint {
  Eigen::VectorXd x_bar;
  double t = 0.0;
  Eigen::VectorXd u_bar;
};

// Throws NonpositiveDenominator if d.x + beta <= feas_tol.
TransformedPoint charnes_cooper_forward(const LFPProblem& p,
                                        const Eigen::VectorXd& x,
                                        double feas_tol = 1e-9);

// x = x_bar / t, u = u_bar / t. Throws DegenerateT if t <= feas_tol.
PrimalPoint charnes_cooper_inverse(const TransformedPoint& tp,
                                   double feas_tol = 1e-9);

// Column layout of the transformed LP: x_bar(0..n-1), then t at n.
// maximize c.x_bar + alpha t
//   A x_bar - b t <= 0      (m rows)
//   d.x_bar + beta t = 1
//   x_bar, t >= 0
LinearProgram build_transformed_lp(const LFPProblem& p);

// Column layout of the dual LP: y(0..m-1), then z at m (free).
// minimize z
//   A^T y + d z >= c        (n rows)
//   -b.y + beta z = alpha
//   y >= 0
LinearProgram build_dual_lp(const LFPProblem& p);

// Optimal value of the transformed LP (equal to the dual optimum).
// Throws InfeasibleRegion, UnboundedObjective or IterationLimit.
double solve_theta_star(const LFPProblem& p, const SolverOptions& opts = {});

// Throws the error matching a non-optimal LP status. `what` names the LP.
[[noreturn]] void throw_for_status(LPStatus status, const char* what);

}  // namespace lfpscsc

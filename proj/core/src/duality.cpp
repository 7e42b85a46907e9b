#include "lfpscsc/duality.hpp"

#include <string>

#include "lfpscsc/error.hpp"

namespace lfpscsc {

TransformedPoint charnes_cooper_forward(const LFPProblem& p,
                                        const Eigen::VectorXd& x,
                                        double feas_tol) {
  if (x.size() != p.num_cols()) {
    throw Error(ErrorCode::DimensionError, "x has the wrong length");
  }
  const double den = p.denominator(x);
  if (!(den > feas_tol)) {
    throw Error(ErrorCode::NonpositiveDenominator,
                "denominator d.x + beta = " + std::to_string(den) +
                    " is not positive");
  }
  TransformedPoint tp;
  tp.t = 1.0 / den;
  tp.x_bar = tp.t * x;
  tp.u_bar = p.b() * tp.t - p.A() * tp.x_bar;
  return tp;
}

PrimalPoint charnes_cooper_inverse(const TransformedPoint& tp,
                                   double feas_tol) {
  if (!(tp.t > feas_tol)) {
    throw Error(ErrorCode::DegenerateT,
                "t = " + std::to_string(tp.t) + " is not positive");
  }
  return PrimalPoint{tp.x_bar / tp.t, tp.u_bar / tp.t};
}

LinearProgram build_transformed_lp(const LFPProblem& p) {
  const Index m = p.num_rows();
  const Index n = p.num_cols();
  Eigen::VectorXd objective(n + 1);
  objective << p.c(), p.alpha();
  LinearProgram lp(Sense::Maximize, std::move(objective));

  Eigen::VectorXd row(n + 1);
  for (Index i = 0; i < m; ++i) {
    row << p.A().row(i).transpose(), -p.b()[i];
    lp.add_row(row, Relation::LessEqual, 0.0);
  }
  row << p.d(), p.beta();
  lp.add_row(row, Relation::Equal, 1.0);
  return lp;
}

LinearProgram build_dual_lp(const LFPProblem& p) {
  const Index m = p.num_rows();
  const Index n = p.num_cols();
  Eigen::VectorXd objective = Eigen::VectorXd::Zero(m + 1);
  objective[m] = 1.0;
  LinearProgram lp(Sense::Minimize, std::move(objective));

  Eigen::VectorXd row(m + 1);
  for (Index j = 0; j < n; ++j) {
    row << p.A().col(j), p.d()[j];
    lp.add_row(row, Relation::GreaterEqual, p.c()[j]);
  }
  row << -p.b(), p.beta();
  lp.add_row(row, Relation::Equal, p.alpha());
  lp.set_bound(m, Bound::free());
  return lp;
}

void throw_for_status(LPStatus status, const char* what) {
  const std::string name(what);
  switch (status) {
    case LPStatus::Infeasible:
      throw Error(ErrorCode::InfeasibleRegion, name + " is infeasible");
    case LPStatus::Unbounded:
      throw Error(ErrorCode::UnboundedObjective, name + " is unbounded");
    case LPStatus::IterationLimit:
    case LPStatus::Optimal:
      break;
  }
  throw Error(ErrorCode::IterationLimit,
              name + " stopped at the iteration limit");
}

double solve_theta_star(const LFPProblem& p, const SolverOptions& opts) {
  const LPOutcome outcome = solve_lp(build_transformed_lp(p), opts);
  if (!outcome.optimal()) throw_for_status(outcome.status, "transformed LP");
  return *outcome.objective;
}

}  // namespace lfpscsc

#pragma once

#include <Eigen/Core>

#include <string_view>

#include "lfpscsc/linear_program.hpp"

namespace lfpscsc {

// maximize (c.x + alpha) / (d.x + beta)  subject to  A x <= b, x >= 0.
class LFPProblem {
 public:
  // Throws DimensionError on inconsistent sizes (or m, n < 1) and
  // ValueError on non-finite entries.
  LFPProblem(Eigen::MatrixXd A, Eigen::VectorXd b, Eigen::VectorXd c,
             Eigen::VectorXd d, double alpha, double beta);

  const Eigen::MatrixXd& A() const { return A_; }
  const Eigen::VectorXd& b() const { return b_; }
  const Eigen::VectorXd& c() const { return c_; }
  const Eigen::VectorXd& d() const { return d_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

  Index num_rows() const { return A_.rows(); }
  Index num_cols() const { return A_.cols(); }

  double numerator(const Eigen::VectorXd& x) const { return c_.dot(x) + alpha_; }
  double denominator(const Eigen::VectorXd& x) const { return d_.dot(x) + beta_; }

 private:
  Eigen::MatrixXd A_;
  Eigen::VectorXd b_;
  Eigen::VectorXd c_;
  Eigen::VectorXd d_;
  double alpha_;
  double beta_;
};

// (x, u) with u = b - A x the primal slack.
struct PrimalPoint {
  Eigen::VectorXd x;
  Eigen::VectorXd u;
};

// (y, z, v) with v = A^T y + d z - c the dual slack and z the dual objective.
struct DualPoint {
  Eigen::VectorXd y;
  double z = 0.0;
  Eigen::VectorXd v;
};

PrimalPoint make_primal_point(const LFPProblem& p, const Eigen::VectorXd& x);
DualPoint make_dual_point(const LFPProblem& p, const Eigen::VectorXd& y,
                          double z);

// Largest violation of x >= 0, u >= 0, u = b - A x.
double primal_infeasibility(const LFPProblem& p, const PrimalPoint& point);
// Largest violation of y >= 0, v >= 0, A^T y + d z - v = c,
// -b^T y + beta z = alpha.
double dual_infeasibility(const LFPProblem& p, const DualPoint& point);

// Throws NonpositiveDenominator when d.x + beta <= feas_tol.
double evaluate_objective(const LFPProblem& p, const Eigen::VectorXd& x,
                          double feas_tol = 1e-9);

// min { d.x + beta : x in X }, one LP solve. The caller decides what
// counts as a violation. Throws InfeasibleRegion if X is empty and
// UnboundedValidation if the minimum is unbounded below.
double validate_denominator(const LFPProblem& p,
                            const SolverOptions& opts = {});

// Parses the JSON problem document
//   {"A": [[...], ...], "b": [...], "c": [...], "d": [...],
//    "alpha": num, "beta": num}
// Throws ParseError, DimensionError or ValueError.
LFPProblem parse_problem(std::string_view text);

}  // namespace lfpscsc

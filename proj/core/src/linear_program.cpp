#include "lfpscsc/linear_program.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lfpscsc/error.hpp"

namespace lfpscsc {

Bound Bound::box(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
    throw Error(ErrorCode::InvalidArgument,
                "box bound requires finite lo <= hi, got [" +
                    std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return Bound(Kind::Box, lo, hi);
}

LinearProgram::LinearProgram(Sense sense, Eigen::VectorXd objective)
    : sense_(sense),
      objective_(std::move(objective)),
      bounds_(static_cast<std::size_t>(objective_.size()),
              Bound::nonnegative()) {
  if (!objective_.allFinite()) {
    throw Error(ErrorCode::ValueError, "objective has non-finite entries");
  }
}

Index LinearProgram::add_row(Eigen::VectorXd coeffs, Relation relation,
                             double rhs) {
  if (coeffs.size() != objective_.size()) {
    throw Error(ErrorCode::DimensionError,
                "row has " + std::to_string(coeffs.size()) +
                    " coefficients, expected " +
                    std::to_string(objective_.size()));
  }
  if (!coeffs.allFinite() || !std::isfinite(rhs)) {
    throw Error(ErrorCode::ValueError, "row has non-finite entries");
  }
  rows_.push_back(Row{std::move(coeffs), relation, rhs});
  return num_rows() - 1;
}

void LinearProgram::set_bound(Index var, Bound bound) {
  if (var < 0 || var >= num_cols()) {
    throw Error(ErrorCode::InvalidArgument,
                "variable index " + std::to_string(var) + " out of range");
  }
  bounds_[static_cast<std::size_t>(var)] = bound;
}

double LinearProgram::objective_value(const Eigen::VectorXd& x) const {
  return objective_.dot(x);
}

double LinearProgram::max_violation(const Eigen::VectorXd& x) const {
  double worst = 0.0;
  for (const Row& row : rows_) {
    const double residual = row.coeffs.dot(x) - row.rhs;
    switch (row.relation) {
      case Relation::LessEqual: worst = std::max(worst, residual); break;
      case Relation::GreaterEqual: worst = std::max(worst, -residual); break;
      case Relation::Equal: worst = std::max(worst, std::abs(residual)); break;
    }
  }
  for (Index j = 0; j < num_cols(); ++j) {
    const Bound& b = bounds_[static_cast<std::size_t>(j)];
    worst = std::max({worst, b.lower() - x[j], x[j] - b.upper()});
  }
  return worst;
}

void SolverOptions::validate() const {
  if (!(feas_tol > 0.0) || !(opt_tol > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "solver tolerances must be > 0");
  }
  if (max_iters && *max_iters <= 0) {
    throw Error(ErrorCode::InvalidArgument, "max_iters must be > 0");
  }
}

long SolverOptions::iteration_cap(const LinearProgram& lp) const {
  if (max_iters) return *max_iters;
  return 50L * static_cast<long>(lp.num_rows() + lp.num_cols());
}

const char* to_string(LPStatus status) {
  switch (status) {
    case LPStatus::Optimal: return "Optimal";
    case LPStatus::Infeasible: return "Infeasible";
    case LPStatus::Unbounded: return "Unbounded";
    case LPStatus::IterationLimit: return "IterationLimit";
  }
  return "Unknown";
}

}  // namespace lfpscsc

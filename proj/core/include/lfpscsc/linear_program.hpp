#pragma once

#include <Eigen/Core>

#include <limits>
#include <optional>
#include <vector>

namespace lfpscsc {

using Index = Eigen::Index;

enum class Sense { Maximize, Minimize };
enum class Relation { LessEqual, Equal, GreaterEqual };

// Per-variable bound. Nonnegative is [0, +inf), Free is (-inf, +inf).
class Bound {
 public:
  enum class Kind { Nonnegative, Box, Free };

  static Bound nonnegative() { return Bound(Kind::Nonnegative, 0.0, kInf); }
  static Bound free() { return Bound(Kind::Free, -kInf, kInf); }
  // Throws InvalidArgument unless lo <= hi and both are finite.
  static Bound box(double lo, double hi);

  Kind kind() const { return kind_; }
  double lower() const { return lo_; }
  double upper() const { return hi_; }

  bool operator==(const Bound&) const = default;

 private:
  static constexpr double kInf = std::numeric_limits<double>::infinity();
  Bound(Kind kind, double lo, double hi) : kind_(kind), lo_(lo), hi_(hi) {}

  Kind kind_;
  double lo_;
  double hi_;
};

struct Row {
  Eigen::VectorXd coeffs;
  Relation relation;
  double rhs;
};

// Dense LP: optimize objective . x over rows and per-variable bounds.
// Variables default to Nonnegative.
class LinearProgram {
 public:
  LinearProgram(Sense sense, Eigen::VectorXd objective);

  // Returns the index of the new row. Throws DimensionError on length
  // mismatch and ValueError on non-finite data.
  Index add_row(Eigen::VectorXd coeffs, Relation relation, double rhs);
  void set_bound(Index var, Bound bound);

  Sense sense() const { return sense_; }
  const Eigen::VectorXd& objective() const { return objective_; }
  const std::vector<Row>& rows() const { return rows_; }
  const std::vector<Bound>& bounds() const { return bounds_; }
  Index num_rows() const { return static_cast<Index>(rows_.size()); }
  Index num_cols() const { return objective_.size(); }

  double objective_value(const Eigen::VectorXd& x) const;
  // Largest violation over all rows and bounds at x (0 when feasible).
  double max_violation(const Eigen::VectorXd& x) const;

 private:
  Sense sense_;
  Eigen::VectorXd objective_;
  std::vector<Row> rows_;
  std::vector<Bound> bounds_;
};

struct SolverOptions {
  double feas_tol = 1e-9;
  double opt_tol = 1e-9;
  // Unset means 50 * (rows + cols) of the LP being solved.
  std::optional<long> max_iters;

  // Throws InvalidArgument if a tolerance or the iteration cap is not
  // strictly positive.
  void validate() const;
  long iteration_cap(const LinearProgram& lp) const;
};

enum class LPStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct LPOutcome {
  LPStatus status = LPStatus::IterationLimit;
  std::optional<Eigen::VectorXd> point;
  std::optional<double> objective;
  long iterations = 0;

  bool optimal() const { return status == LPStatus::Optimal; }
};

const char* to_string(LPStatus status);

// Two-phase bounded-variable primal simplex on a dense tableau. Pure
// function: safe to call concurrently.
LPOutcome solve_lp(const LinearProgram& lp, const SolverOptions& opts = {});

}  // namespace lfpscsc

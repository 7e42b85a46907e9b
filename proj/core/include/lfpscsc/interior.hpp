#pragma once

#include <Eigen/Core>

#include <vector>

#include "lfpscsc/linear_program.hpp"

namespace lfpscsc {

// Sorted, zero-based coordinate indices.
using IndexSet = std::vector<Index>;

// P = { x | A_eq x = b_eq, x >= 0 }.
class Polyhedron {
 public:
  // Throws DimensionError or ValueError.
  Polyhedron(Eigen::MatrixXd A_eq, Eigen::VectorXd b_eq);

  const Eigen::MatrixXd& A_eq() const { return A_eq_; }
  const Eigen::VectorXd& b_eq() const { return b_eq_; }
  Index num_rows() const { return A_eq_.rows(); }
  Index dim() const { return A_eq_.cols(); }

 private:
  Eigen::MatrixXd A_eq_;
  Eigen::VectorXd b_eq_;
};

struct MaximalElement {
  Eigen::VectorXd point;
  IndexSet support;
};

// Column positions in the maximal-element LP for a polyhedron of
// dimension n: x1 (n), w1, x2 (n), w2.
struct MaximalElementLayout {
  Index n;

  Index x1(Index j) const { return j; }
  Index w1() const { return n; }
  Index x2(Index j) const { return n + 1 + j; }
  Index w2() const { return 2 * n + 1; }
  Index size() const { return 2 * n + 2; }
};

// maximize 1.x2 + w2
//   A (x1 + x2) - b (w1 + w2) = 0
//   x1, w1 >= 0;  0 <= x2, w2 <= 1
LinearProgram build_maximal_element_lp(const Polyhedron& poly);

// x_max = (x1 + x2) / (w1 + w2). Throws EmptyPolyhedron when
// w1 + w2 <= feas_tol, and InvalidArgument if outcome is not Optimal.
MaximalElement recover_maximal_element(const LPOutcome& outcome,
                                       const Polyhedron& poly,
                                       double pos_tol = 1e-7,
                                       double feas_tol = 1e-9);

// A point of ri(P): its support is the largest support attained on P.
MaximalElement find_relative_interior_point(const Polyhedron& poly,
                                            const SolverOptions& opts = {},
                                            double pos_tol = 1e-7);

// Independent check: { j | sup{x_j : x in P} > pos_tol } from one LP per
// coordinate (an unbounded coordinate counts as positive). Throws
// EmptyPolyhedron if P is empty.
IndexSet coordinate_support_oracle(const Polyhedron& poly,
                                   const SolverOptions& opts = {},
                                   double pos_tol = 1e-7);

IndexSet support_of(const Eigen::VectorXd& v, double pos_tol);

}  // namespace lfpscsc

#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

#include "lfpscsc/duality.hpp"
#include "lfpscsc/interior.hpp"
#include "lfpscsc/lfp_model.hpp"
#include "lfpscsc/linear_program.hpp"

namespace lfpscsc {

// A primal-dual pair for the LFP together with the transformed scale t*
// and the optimal value. Strict complementarity is checked by
// verify_csc / verify_scsc, not assumed.
struct StrictComplementarySolution {
  PrimalPoint primal;
  double t_star = 0.0;
  DualPoint dual;
  double theta_star = 0.0;
};

// Supports of x*, v* (partitioning 0..n-1) and u*, y* (partitioning 0..m-1).
struct OptimalPartition {
  IndexSet sigma_x;
  IndexSet sigma_v;
  IndexSet sigma_u;
  IndexSet sigma_y;

  bool operator==(const OptimalPartition&) const = default;
};

// Column layout of the primal face LP:
//   x1 (n), p, u1 (m), w1, x2 (n), u2 (m), w2
struct PrimalInteriorLayout {
  Index n;
  Index m;

  Index x1(Index j) const { return j; }
  Index p() const { return n; }
  Index u1(Index i) const { return n + 1 + i; }
  Index w1() const { return n + m + 1; }
  Index x2(Index j) const { return n + m + 2 + j; }
  Index u2(Index i) const { return 2 * n + m + 2 + i; }
  Index w2() const { return 2 * n + 2 * m + 2; }
  Index size() const { return 2 * n + 2 * m + 3; }
};

// Column layout of the dual face LP:
//   y1 (m), q, v1 (n), w1, y2 (m), v2 (n), w2
struct DualInteriorLayout {
  Index n;
  Index m;

  Index y1(Index i) const { return i; }
  Index q() const { return m; }
  Index v1(Index j) const { return m + 1 + j; }
  Index w1() const { return m + n + 1; }
  Index y2(Index i) const { return m + n + 2 + i; }
  Index v2(Index j) const { return 2 * m + n + 2 + j; }
  Index w2() const { return 2 * m + 2 * n + 2; }
  Index size() const { return 2 * m + 2 * n + 3; }
};

// Column layout of the joint primal-dual LP:
//   x1 (n), p, u1 (m), y1 (m), q, v1 (n), w1,
//   x2 (n), u2 (m), y2 (m), v2 (n), w2
struct JointLayout {
  Index n;
  Index m;

  Index x1(Index j) const { return j; }
  Index p() const { return n; }
  Index u1(Index i) const { return n + 1 + i; }
  Index y1(Index i) const { return n + m + 1 + i; }
  Index q() const { return n + 2 * m + 1; }
  Index v1(Index j) const { return n + 2 * m + 2 + j; }
  Index w1() const { return 2 * n + 2 * m + 2; }
  Index x2(Index j) const { return 2 * n + 2 * m + 3 + j; }
  Index u2(Index i) const { return 3 * n + 2 * m + 3 + i; }
  Index y2(Index i) const { return 3 * n + 3 * m + 3 + i; }
  Index v2(Index j) const { return 3 * n + 4 * m + 3 + j; }
  Index w2() const { return 4 * n + 4 * m + 3; }
  Index size() const { return 4 * n + 4 * m + 4; }
};

/// Maximal-element LP over the optimal face of the transformed primal,
/// homogenized in (w1 + w2):
///
///   maximize 1.x2 + 1.u2 + w2
///     A (x1+x2) - b p + (u1+u2)              = 0   (m rows)
///     d.(x1+x2) + beta p - (w1+w2)           = 0
///     c.(x1+x2) + alpha p - theta*(w1+w2)    = 0
///
/// t is not split: it is positive everywhere on the face.
LinearProgram build_primal_interior_lp(const LFPProblem& p, double theta_star);

/// Maximal-element LP over the optimal face of the dual, with q free:
///
///   maximize 1.y2 + 1.v2 + w2
///     A^T (y1+y2) + d q - (v1+v2) - c (w1+w2) = 0   (n rows)
///     -b.(y1+y2) + beta q - alpha (w1+w2)     = 0
///     q - theta* (w1+w2)                      = 0
LinearProgram build_dual_interior_lp(const LFPProblem& p, double theta_star);

// (x_bar*, t*, u_bar*) = (x1+x2, p, u1+u2) / (w1+w2). Throws
// DegenerateNormalizer when w1 + w2 <= feas_tol.
TransformedPoint recover_primal_interior(const LFPProblem& p,
                                         const LPOutcome& outcome,
                                         double feas_tol = 1e-9);

// (y*, z*, v*) = (y1+y2, q, v1+v2) / (w1+w2).
DualPoint recover_dual_interior(const LFPProblem& p, const LPOutcome& outcome,
                                double feas_tol = 1e-9);

// Stage 1 computes theta*, then the two face LPs are solved (concurrently)
// and their maximal elements mapped back to the LFP.
StrictComplementarySolution approach_one(const LFPProblem& p,
                                         const SolverOptions& opts = {});

/// Joint LP over both faces sharing one homogenizing pair (w1, w2); no
/// theta* required because the coupling row equates the two objectives.
///
///   maximize 1.x2 + 1.u2 + 1.y2 + 1.v2 + w2
///     A (x1+x2) - b p + (u1+u2)                   = 0   (m rows)
///     d.(x1+x2) + beta p - (w1+w2)                = 0
///     A^T (y1+y2) + d q - (v1+v2) - c (w1+w2)     = 0   (n rows)
///     -b.(y1+y2) + beta q - alpha (w1+w2)         = 0
///     c.(x1+x2) + alpha p - q                     = 0
LinearProgram build_joint_lp(const LFPProblem& p);

// One joint solve; theta* is read off as the recovered z*.
StrictComplementarySolution approach_two(const LFPProblem& p,
                                         const SolverOptions& opts = {});

struct CscReport {
  double x_dot_v = 0.0;
  double y_dot_u = 0.0;
  double tol = 0.0;
  bool passed = false;
};

CscReport verify_csc(const StrictComplementarySolution& sol,
                     double csc_tol = 1e-7);

// A component close enough to pos_tol that its classification is suspect.
struct NumericalWarning {
  std::string component;  // "x", "v", "u" or "y"
  Index index;
  double value;
};

struct ScscReport {
  double min_x_plus_v = 0.0;
  double min_y_plus_u = 0.0;
  double tol = 0.0;
  IndexSet failing_n;  // j with x_j + v_j <= tol
  IndexSet failing_m;  // i with y_i + u_i <= tol
  std::vector<NumericalWarning> warnings;
  bool passed = false;
};

// Warnings are raised for components in (pos_tol / 10, pos_tol].
ScscReport verify_scsc(const StrictComplementarySolution& sol,
                       double pos_tol = 1e-7);

// Throws PartitionViolation if the supports fail to partition 0..n-1 or
// 0..m-1 at pos_tol.
OptimalPartition optimal_partitions(const StrictComplementarySolution& sol,
                                    double pos_tol = 1e-7);

// max(|f(x*) - z*|, |z* - theta*|).
double optimality_gap(const LFPProblem& p,
                      const StrictComplementarySolution& sol);

}  // namespace lfpscsc

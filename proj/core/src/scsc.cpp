#include "lfpscsc/scsc.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <string>

#include "lfpscsc/error.hpp"

namespace lfpscsc {
namespace {

const Eigen::VectorXd& optimal_point(const LPOutcome& outcome, Index size,
                                     const char* what) {
  if (!outcome.optimal() || !outcome.point || outcome.point->size() != size) {
    throw Error(ErrorCode::InvalidArgument,
                std::string("recovery needs an optimal outcome of the ") +
                    what);
  }
  return *outcome.point;
}

double normalizer(const Eigen::VectorXd& z, Index w1, Index w2,
                  double feas_tol, const char* what) {
  const double scale = z[w1] + z[w2];
  if (!(scale > feas_tol)) {
    throw Error(ErrorCode::DegenerateNormalizer,
                std::string("w1 + w2 vanishes in the ") + what +
                    "; the optimal face is empty");
  }
  return scale;
}

LPOutcome solve_or_throw(const LinearProgram& lp, const SolverOptions& opts,
                         const char* what) {
  LPOutcome outcome = solve_lp(lp, opts);
  if (!outcome.optimal()) throw_for_status(outcome.status, what);
  return outcome;
}

void append_ones(Eigen::VectorXd& objective, Index begin, Index count) {
  objective.segment(begin, count).setOnes();
}

}  // namespace

LinearProgram build_primal_interior_lp(const LFPProblem& p, double theta_star) {
  const Index m = p.num_rows();
  const Index n = p.num_cols();
  const PrimalInteriorLayout at{n, m};

  Eigen::VectorXd objective = Eigen::VectorXd::Zero(at.size());
  append_ones(objective, at.x2(0), n);
  append_ones(objective, at.u2(0), m);
  objective[at.w2()] = 1.0;
  LinearProgram lp(Sense::Maximize, std::move(objective));

  Eigen::VectorXd row(at.size());
  for (Index i = 0; i < m; ++i) {
    row.setZero();
    row.segment(at.x1(0), n) = p.A().row(i).transpose();
    row.segment(at.x2(0), n) = p.A().row(i).transpose();
    row[at.p()] = -p.b()[i];
    row[at.u1(i)] = 1.0;
    row[at.u2(i)] = 1.0;
    lp.add_row(row, Relation::Equal, 0.0);
  }

  row.setZero();
  row.segment(at.x1(0), n) = p.d();
  row.segment(at.x2(0), n) = p.d();
  row[at.p()] = p.beta();
  row[at.w1()] = -1.0;
  row[at.w2()] = -1.0;
  lp.add_row(row, Relation::Equal, 0.0);

  row.setZero();
  row.segment(at.x1(0), n) = p.c();
  row.segment(at.x2(0), n) = p.c();
  row[at.p()] = p.alpha();
  row[at.w1()] = -theta_star;
  row[at.w2()] = -theta_star;
  lp.add_row(row, Relation::Equal, 0.0);

  for (Index j = 0; j < n; ++j) lp.set_bound(at.x2(j), Bound::box(0.0, 1.0));
  for (Index i = 0; i < m; ++i) lp.set_bound(at.u2(i), Bound::box(0.0, 1.0));
  lp.set_bound(at.w2(), Bound::box(0.0, 1.0));
  return lp;
}

LinearProgram build_dual_interior_lp(const LFPProblem& p, double theta_star) {
  const Index m = p.num_rows();
  const Index n = p.num_cols();
  const DualInteriorLayout at{n, m};

  Eigen::VectorXd objective = Eigen::VectorXd::Zero(at.size());
  append_ones(objective, at.y2(0), m);
  append_ones(objective, at.v2(0), n);
  objective[at.w2()] = 1.0;
  LinearProgram lp(Sense::Maximize, std::move(objective));

  Eigen::VectorXd row(at.size());
  for (Index j = 0; j < n; ++j) {
    row.setZero();
    row.segment(at.y1(0), m) = p.A().col(j);
    row.segment(at.y2(0), m) = p.A().col(j);
    row[at.q()] = p.d()[j];
    row[at.v1(j)] = -1.0;
    row[at.v2(j)] = -1.0;
    row[at.w1()] = -p.c()[j];
    row[at.w2()] = -p.c()[j];
    lp.add_row(row, Relation::Equal, 0.0);
  }

  row.setZero();
  row.segment(at.y1(0), m) = -p.b();
  row.segment(at.y2(0), m) = -p.b();
  row[at.q()] = p.beta();
  row[at.w1()] = -p.alpha();
  row[at.w2()] = -p.alpha();
  lp.add_row(row, Relation::Equal, 0.0);

  row.setZero();
  row[at.q()] = 1.0;
  row[at.w1()] = -theta_star;
  row[at.w2()] = -theta_star;
  lp.add_row(row, Relation::Equal, 0.0);

  lp.set_bound(at.q(), Bound::free());
  for (Index i = 0; i < m; ++i) lp.set_bound(at.y2(i), Bound::box(0.0, 1.0));
  for (Index j = 0; j < n; ++j) lp.set_bound(at.v2(j), Bound::box(0.0, 1.0));
  lp.set_bound(at.w2(), Bound::box(0.0, 1.0));
  return lp;
}

TransformedPoint recover_primal_interior(const LFPProblem& p,
                                         const LPOutcome& outcome,
                                         double feas_tol) {
  const PrimalInteriorLayout at{p.num_cols(), p.num_rows()};
  const Eigen::VectorXd& z = optimal_point(outcome, at.size(), "primal face LP");
  const double scale = normalizer(z, at.w1(), at.w2(), feas_tol, "primal face LP");
  TransformedPoint tp;
  tp.x_bar = (z.segment(at.x1(0), at.n) + z.segment(at.x2(0), at.n)) / scale;
  tp.t = z[at.p()] / scale;
  tp.u_bar = (z.segment(at.u1(0), at.m) + z.segment(at.u2(0), at.m)) / scale;
  return tp;
}

DualPoint recover_dual_interior(const LFPProblem& p, const LPOutcome& outcome,
                                double feas_tol) {
  const DualInteriorLayout at{p.num_cols(), p.num_rows()};
  const Eigen::VectorXd& z = optimal_point(outcome, at.size(), "dual face LP");
  const double scale = normalizer(z, at.w1(), at.w2(), feas_tol, "dual face LP");
  DualPoint dual;
  dual.y = (z.segment(at.y1(0), at.m) + z.segment(at.y2(0), at.m)) / scale;
  dual.z = z[at.q()] / scale;
  dual.v = (z.segment(at.v1(0), at.n) + z.segment(at.v2(0), at.n)) / scale;
  return dual;
}

StrictComplementarySolution approach_one(const LFPProblem& p,
                                         const SolverOptions& opts) {
  opts.validate();
  const double theta_star = solve_theta_star(p, opts);

  const LinearProgram primal_lp = build_primal_interior_lp(p, theta_star);
  const LinearProgram dual_lp = build_dual_interior_lp(p, theta_star);
  auto primal_future = std::async(std::launch::async, [&] {
    return solve_or_throw(primal_lp, opts, "primal face LP");
  });
  const LPOutcome dual_outcome = solve_or_throw(dual_lp, opts, "dual face LP");
  const LPOutcome primal_outcome = primal_future.get();

  const TransformedPoint tp =
      recover_primal_interior(p, primal_outcome, opts.feas_tol);
  StrictComplementarySolution sol;
  sol.primal = charnes_cooper_inverse(tp, opts.feas_tol);
  sol.t_star = tp.t;
  sol.dual = recover_dual_interior(p, dual_outcome, opts.feas_tol);
  sol.theta_star = theta_star;
  return sol;
}

LinearProgram build_joint_lp(const LFPProblem& p) {
  const Index m = p.num_rows();
  const Index n = p.num_cols();
  const JointLayout at{n, m};

  Eigen::VectorXd objective = Eigen::VectorXd::Zero(at.size());
  append_ones(objective, at.x2(0), n);
  append_ones(objective, at.u2(0), m);
  append_ones(objective, at.y2(0), m);
  append_ones(objective, at.v2(0), n);
  objective[at.w2()] = 1.0;
  LinearProgram lp(Sense::Maximize, std::move(objective));

  Eigen::VectorXd row(at.size());
  // Primal face rows.
  for (Index i = 0; i < m; ++i) {
    row.setZero();
    row.segment(at.x1(0), n) = p.A().row(i).transpose();
    row.segment(at.x2(0), n) = p.A().row(i).transpose();
    row[at.p()] = -p.b()[i];
    row[at.u1(i)] = 1.0;
    row[at.u2(i)] = 1.0;
    lp.add_row(row, Relation::Equal, 0.0);
  }
  row.setZero();
  row.segment(at.x1(0), n) = p.d();
  row.segment(at.x2(0), n) = p.d();
  row[at.p()] = p.beta();
  row[at.w1()] = -1.0;
  row[at.w2()] = -1.0;
  lp.add_row(row, Relation::Equal, 0.0);

  // Dual face rows.
  for (Index j = 0; j < n; ++j) {
    row.setZero();
    row.segment(at.y1(0), m) = p.A().col(j);
    row.segment(at.y2(0), m) = p.A().col(j);
    row[at.q()] = p.d()[j];
    row[at.v1(j)] = -1.0;
    row[at.v2(j)] = -1.0;
    row[at.w1()] = -p.c()[j];
    row[at.w2()] = -p.c()[j];
    lp.add_row(row, Relation::Equal, 0.0);
  }
  row.setZero();
  row.segment(at.y1(0), m) = -p.b();
  row.segment(at.y2(0), m) = -p.b();
  row[at.q()] = p.beta();
  row[at.w1()] = -p.alpha();
  row[at.w2()] = -p.alpha();
  lp.add_row(row, Relation::Equal, 0.0);

  // Primal objective equals dual objective.
  row.setZero();
  row.segment(at.x1(0), n) = p.c();
  row.segment(at.x2(0), n) = p.c();
  row[at.p()] = p.alpha();
  row[at.q()] = -1.0;
  lp.add_row(row, Relation::Equal, 0.0);

  lp.set_bound(at.q(), Bound::free());
  for (Index j = 0; j < n; ++j) {
    lp.set_bound(at.x2(j), Bound::box(0.0, 1.0));
    lp.set_bound(at.v2(j), Bound::box(0.0, 1.0));
  }
  for (Index i = 0; i < m; ++i) {
    lp.set_bound(at.u2(i), Bound::box(0.0, 1.0));
    lp.set_bound(at.y2(i), Bound::box(0.0, 1.0));
  }
  lp.set_bound(at.w2(), Bound::box(0.0, 1.0));
  return lp;
}

StrictComplementarySolution approach_two(const LFPProblem& p,
                                         const SolverOptions& opts) {
  opts.validate();
  const Index m = p.num_rows();
  const Index n = p.num_cols();
  const JointLayout at{n, m};

  const LPOutcome outcome = solve_or_throw(build_joint_lp(p), opts, "joint LP");
  const Eigen::VectorXd& z = *outcome.point;
  const double scale = z[at.w1()] + z[at.w2()];
  if (!(scale > opts.feas_tol)) {
    // An empty joint face usually means X is empty or the LFP is
    // unbounded; the stage-1 solve names the cause.
    solve_theta_star(p, opts);
    throw Error(ErrorCode::DegenerateNormalizer,
                "w1 + w2 vanishes in the joint LP; the optimal face is empty");
  }

  TransformedPoint tp;
  tp.x_bar = (z.segment(at.x1(0), n) + z.segment(at.x2(0), n)) / scale;
  tp.t = z[at.p()] / scale;
  tp.u_bar = (z.segment(at.u1(0), m) + z.segment(at.u2(0), m)) / scale;

  StrictComplementarySolution sol;
  sol.primal = charnes_cooper_inverse(tp, opts.feas_tol);
  sol.t_star = tp.t;
  sol.dual.y = (z.segment(at.y1(0), m) + z.segment(at.y2(0), m)) / scale;
  sol.dual.z = z[at.q()] / scale;
  sol.dual.v = (z.segment(at.v1(0), n) + z.segment(at.v2(0), n)) / scale;
  sol.theta_star = sol.dual.z;
  return sol;
}

CscReport verify_csc(const StrictComplementarySolution& sol, double csc_tol) {
  CscReport report;
  report.x_dot_v = sol.primal.x.dot(sol.dual.v);
  report.y_dot_u = sol.dual.y.dot(sol.primal.u);
  report.tol = csc_tol;
  report.passed = std::abs(report.x_dot_v) <= csc_tol &&
                  std::abs(report.y_dot_u) <= csc_tol;
  return report;
}

ScscReport verify_scsc(const StrictComplementarySolution& sol, double pos_tol) {
  const Eigen::VectorXd& x = sol.primal.x;
  const Eigen::VectorXd& u = sol.primal.u;
  const Eigen::VectorXd& y = sol.dual.y;
  const Eigen::VectorXd& v = sol.dual.v;

  ScscReport report;
  report.tol = pos_tol;
  const Eigen::VectorXd xv = x + v;
  const Eigen::VectorXd yu = y + u;
  report.min_x_plus_v = xv.minCoeff();
  report.min_y_plus_u = yu.minCoeff();
  for (Index j = 0; j < xv.size(); ++j) {
    if (!(xv[j] > pos_tol)) report.failing_n.push_back(j);
  }
  for (Index i = 0; i < yu.size(); ++i) {
    if (!(yu[i] > pos_tol)) report.failing_m.push_back(i);
  }

  auto scan = [&](const char* name, const Eigen::VectorXd& values) {
    for (Index k = 0; k < values.size(); ++k) {
      if (values[k] > pos_tol / 10.0 && values[k] <= pos_tol) {
        report.warnings.push_back(NumericalWarning{name, k, values[k]});
      }
    }
  };
  scan("x", x);
  scan("v", v);
  scan("u", u);
  scan("y", y);

  report.passed = report.failing_n.empty() && report.failing_m.empty();
  return report;
}

OptimalPartition optimal_partitions(const StrictComplementarySolution& sol,
                                    double pos_tol) {
  OptimalPartition part;
  part.sigma_x = support_of(sol.primal.x, pos_tol);
  part.sigma_v = support_of(sol.dual.v, pos_tol);
  part.sigma_u = support_of(sol.primal.u, pos_tol);
  part.sigma_y = support_of(sol.dual.y, pos_tol);

  auto check = [](const IndexSet& a, const IndexSet& b, Index size,
                  const char* a_name, const char* b_name) {
    for (Index k = 0; k < size; ++k) {
      const bool in_a = std::binary_search(a.begin(), a.end(), k);
      const bool in_b = std::binary_search(b.begin(), b.end(), k);
      if (in_a == in_b) {
        throw Error(ErrorCode::PartitionViolation,
                    "index " + std::to_string(k + 1) + " is in " +
                        (in_a ? "both " : "neither ") + a_name + " and " +
                        b_name);
      }
    }
  };
  check(part.sigma_x, part.sigma_v, sol.primal.x.size(), "sigma_x", "sigma_v");
  check(part.sigma_u, part.sigma_y, sol.primal.u.size(), "sigma_u", "sigma_y");
  return part;
}

double optimality_gap(const LFPProblem& p,
                      const StrictComplementarySolution& sol) {
  const double f = evaluate_objective(p, sol.primal.x);
  return std::max(std::abs(f - sol.dual.z),
                  std::abs(sol.dual.z - sol.theta_star));
}

}  // namespace lfpscsc

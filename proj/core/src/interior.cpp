#include "lfpscsc/interior.hpp"

#include <future>
#include <string>

#include "lfpscsc/duality.hpp"
#include "lfpscsc/error.hpp"

namespace lfpscsc {

Polyhedron::Polyhedron(Eigen::MatrixXd A_eq, Eigen::VectorXd b_eq)
    : A_eq_(std::move(A_eq)), b_eq_(std::move(b_eq)) {
  if (A_eq_.rows() != b_eq_.size()) {
    throw Error(ErrorCode::DimensionError,
                "A_eq has " + std::to_string(A_eq_.rows()) + " rows but b_eq has " +
                    std::to_string(b_eq_.size()) + " entries");
  }
  if (!A_eq_.allFinite() || !b_eq_.allFinite()) {
    throw Error(ErrorCode::ValueError, "polyhedron data must be finite");
  }
}

IndexSet support_of(const Eigen::VectorXd& v, double pos_tol) {
  IndexSet out;
  for (Index j = 0; j < v.size(); ++j) {
    if (v[j] > pos_tol) out.push_back(j);
  }
  return out;
}

LinearProgram build_maximal_element_lp(const Polyhedron& poly) {
  const MaximalElementLayout layout{poly.dim()};
  const Index n = layout.n;

  Eigen::VectorXd objective = Eigen::VectorXd::Zero(layout.size());
  objective.segment(layout.x2(0), n).setOnes();
  objective[layout.w2()] = 1.0;
  LinearProgram lp(Sense::Maximize, std::move(objective));

  Eigen::VectorXd row(layout.size());
  for (Index i = 0; i < poly.num_rows(); ++i) {
    row.segment(layout.x1(0), n) = poly.A_eq().row(i).transpose();
    row[layout.w1()] = -poly.b_eq()[i];
    row.segment(layout.x2(0), n) = poly.A_eq().row(i).transpose();
    row[layout.w2()] = -poly.b_eq()[i];
    lp.add_row(row, Relation::Equal, 0.0);
  }
  for (Index j = 0; j < n; ++j) lp.set_bound(layout.x2(j), Bound::box(0.0, 1.0));
  lp.set_bound(layout.w2(), Bound::box(0.0, 1.0));
  return lp;
}

MaximalElement recover_maximal_element(const LPOutcome& outcome,
                                       const Polyhedron& poly, double pos_tol,
                                       double feas_tol) {
  const MaximalElementLayout layout{poly.dim()};
  if (!outcome.optimal() || !outcome.point ||
      outcome.point->size() != layout.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "maximal-element recovery needs an optimal outcome of the built LP");
  }
  const Eigen::VectorXd& z = *outcome.point;
  const Index n = layout.n;
  const double scale = z[layout.w1()] + z[layout.w2()];
  if (!(scale > feas_tol)) {
    throw Error(ErrorCode::EmptyPolyhedron, "polyhedron is empty");
  }
  MaximalElement element;
  element.point =
      (z.segment(layout.x1(0), n) + z.segment(layout.x2(0), n)) / scale;
  element.support = support_of(element.point, pos_tol);
  return element;
}

MaximalElement find_relative_interior_point(const Polyhedron& poly,
                                            const SolverOptions& opts,
                                            double pos_tol) {
  const LPOutcome outcome = solve_lp(build_maximal_element_lp(poly), opts);
  // The built LP is feasible (at zero) and bounded (objective <= n + 1).
  if (!outcome.optimal()) throw_for_status(outcome.status, "maximal-element LP");
  return recover_maximal_element(outcome, poly, pos_tol, opts.feas_tol);
}

IndexSet coordinate_support_oracle(const Polyhedron& poly,
                                   const SolverOptions& opts, double pos_tol) {
  const Index n = poly.dim();
  auto coordinate_max = [&](Index j) {
    Eigen::VectorXd objective = Eigen::VectorXd::Zero(n);
    objective[j] = 1.0;
    LinearProgram lp(Sense::Maximize, std::move(objective));
    for (Index i = 0; i < poly.num_rows(); ++i) {
      lp.add_row(poly.A_eq().row(i).transpose(), Relation::Equal,
                 poly.b_eq()[i]);
    }
    return solve_lp(lp, opts);
  };

  std::vector<std::future<LPOutcome>> pending;
  pending.reserve(static_cast<std::size_t>(n));
  for (Index j = 0; j < n; ++j) {
    pending.push_back(std::async(std::launch::async, coordinate_max, j));
  }

  IndexSet support;
  bool empty = false;
  for (Index j = 0; j < n; ++j) {
    const LPOutcome outcome = pending[static_cast<std::size_t>(j)].get();
    switch (outcome.status) {
      case LPStatus::Optimal:
        if (*outcome.objective > pos_tol) support.push_back(j);
        break;
      case LPStatus::Unbounded: support.push_back(j); break;
      case LPStatus::Infeasible: empty = true; break;
      case LPStatus::IterationLimit:
        throw Error(ErrorCode::IterationLimit,
                    "support oracle LP stopped at the iteration limit");
    }
  }
  if (empty) {
    throw Error(ErrorCode::EmptyPolyhedron, "polyhedron is empty");
  }
  return support;
}

}  // namespace lfpscsc

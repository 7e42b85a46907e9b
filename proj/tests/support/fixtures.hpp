#pragma once

// Test-only fixtures and independent oracles. Nothing here calls into the
// simplex engine except where noted, so results can be compared against it.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "lfpscsc/lfpscsc.hpp"

namespace lfpscsc::testing {

// maximize (6x1 + 3x2 + 6) / (5x1 + 2x2 + 5)
//   2x1 + x2 <= 6, -2x1 + x2 <= 2, x >= 0
inline LFPProblem golden_problem() {
  Eigen::MatrixXd A(2, 2);
  A << 2, 1, -2, 1;
  return LFPProblem(A, Eigen::Vector2d(6, 2), Eigen::Vector2d(6, 3),
                    Eigen::Vector2d(5, 2), 6.0, 5.0);
}

// Every optimal primal-dual pair of the golden instance, parametrized by
// lambda in [0, 1]; strict only on the open interval.
inline StrictComplementarySolution golden_solution(double lambda) {
  StrictComplementarySolution sol;
  sol.primal.x = Eigen::Vector2d(1.0 - lambda, 4.0 - 2.0 * lambda);
  sol.primal.u = Eigen::Vector2d(4.0 * lambda, 0.0);
  sol.dual.y = Eigen::Vector2d(0.0, 1.0 / 3.0);
  sol.dual.z = 4.0 / 3.0;
  sol.dual.v = Eigen::Vector2d(0.0, 0.0);
  sol.theta_star = 4.0 / 3.0;
  sol.t_star = 1.0 / (5.0 * sol.primal.x[0] + 2.0 * sol.primal.x[1] + 5.0);
  return sol;
}

// max (x + alpha) / (x + beta) subject to 0 <= x <= rhs.
inline LFPProblem scalar_problem(double rhs, double alpha, double beta) {
  return LFPProblem(Eigen::MatrixXd::Constant(1, 1, 1.0),
                    Eigen::VectorXd::Constant(1, rhs),
                    Eigen::VectorXd::Constant(1, 1.0),
                    Eigen::VectorXd::Constant(1, 1.0), alpha, beta);
}

struct HalfSpace {
  Eigen::VectorXd a;
  double b;
  bool equality;
};

// Constraint rows of an LP (rows and finite bounds) as a <= / = system.
inline std::vector<HalfSpace> halfspaces_of(const LinearProgram& lp) {
  std::vector<HalfSpace> out;
  const Index n = lp.num_cols();
  for (const Row& row : lp.rows()) {
    switch (row.relation) {
      case Relation::LessEqual: out.push_back({row.coeffs, row.rhs, false}); break;
      case Relation::GreaterEqual: out.push_back({-row.coeffs, -row.rhs, false}); break;
      case Relation::Equal: out.push_back({row.coeffs, row.rhs, true}); break;
    }
  }
  for (Index j = 0; j < n; ++j) {
    const Bound& bd = lp.bounds()[static_cast<std::size_t>(j)];
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e[j] = 1.0;
    if (std::isfinite(bd.lower())) out.push_back({-e, -bd.lower(), false});
    if (std::isfinite(bd.upper())) out.push_back({e, bd.upper(), false});
  }
  return out;
}

// Brute-force vertex enumeration: every choice of n linearly independent
// active constraints (equalities always active) whose solution is feasible.
inline std::vector<Eigen::VectorXd> enumerate_vertices(const LinearProgram& lp,
                                                       double tol = 1e-9) {
  const Index n = lp.num_cols();
  const std::vector<HalfSpace> hs = halfspaces_of(lp);
  std::vector<std::size_t> eq, ineq;
  Eigen::MatrixXd eq_rows(0, n);
  for (std::size_t k = 0; k < hs.size(); ++k) {
    if (!hs[k].equality) {
      ineq.push_back(k);
      continue;
    }
    // Keep a linearly independent subset; the rest are still checked below.
    Eigen::MatrixXd grown(eq_rows.rows() + 1, n);
    grown << eq_rows, hs[k].a.transpose();
    if (Eigen::FullPivLU<Eigen::MatrixXd>(grown).rank() == grown.rows()) {
      eq_rows = grown;
      eq.push_back(k);
    }
  }
  std::vector<Eigen::VectorXd> vertices;
  const Index need = n - static_cast<Index>(eq.size());
  if (need < 0 || need > static_cast<Index>(ineq.size())) return vertices;

  std::vector<bool> pick(ineq.size(), false);
  std::fill(pick.begin(), pick.begin() + need, true);
  do {
    std::vector<std::size_t> active = eq;
    for (std::size_t k = 0; k < ineq.size(); ++k) {
      if (pick[k]) active.push_back(ineq[k]);
    }
    Eigen::MatrixXd M(static_cast<Index>(active.size()), n);
    Eigen::VectorXd r(static_cast<Index>(active.size()));
    for (std::size_t k = 0; k < active.size(); ++k) {
      M.row(static_cast<Index>(k)) = hs[active[k]].a.transpose();
      r[static_cast<Index>(k)] = hs[active[k]].b;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
    if (lu.rank() != n) continue;
    const Eigen::VectorXd x = lu.solve(r);
    bool feasible = true;
    for (const HalfSpace& h : hs) {
      const double res = h.a.dot(x) - h.b;
      if (h.equality ? std::abs(res) > tol * (1 + std::abs(h.b)) : res > tol * (1 + std::abs(h.b))) {
        feasible = false;
        break;
      }
    }
    if (feasible) vertices.push_back(x);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return vertices;
}

// Best objective over enumerated vertices (sense-aware), if any vertex exists.
inline std::optional<double> best_vertex_objective(const LinearProgram& lp) {
  std::optional<double> best;
  for (const Eigen::VectorXd& v : enumerate_vertices(lp)) {
    const double value = lp.objective().dot(v);
    if (!best || (lp.sense() == Sense::Maximize ? value > *best : value < *best)) {
      best = value;
    }
  }
  return best;
}

// Random bounded LFP with b > 0 (so 0 is feasible), d >= 0 and beta >= 1.
// Integer data makes ties and alternative optima common.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(unsigned seed, Index max_n = 6, Index max_m = 6)
      : rng_(seed), max_n_(max_n), max_m_(max_m) {}

  LFPProblem next() {
    const Index n = uniform_int(1, max_n_);
    const Index m = uniform_int(1, max_m_);
    return next(n, m);
  }

  LFPProblem next(Index n, Index m) {
    Eigen::MatrixXd A(m, n);
    for (Index i = 0; i < m; ++i) {
      for (Index j = 0; j < n; ++j) {
        A(i, j) = bernoulli(0.3) ? 0.0 : static_cast<double>(uniform_int(-3, 5));
      }
    }
    // A strictly positive row bounds X.
    for (Index j = 0; j < n; ++j) A(0, j) = static_cast<double>(uniform_int(1, 5));
    Eigen::VectorXd b(m), c(n), d(n);
    for (Index i = 0; i < m; ++i) b[i] = static_cast<double>(uniform_int(1, 10));
    for (Index j = 0; j < n; ++j) {
      d[j] = static_cast<double>(uniform_int(0, 4));
      c[j] = static_cast<double>(uniform_int(-4, 6));
    }
    double alpha = static_cast<double>(uniform_int(-3, 6));
    const double beta = static_cast<double>(uniform_int(1, 5));
    if (bernoulli(0.2)) {
      // Proportional numerator: f is constant on X, every point is optimal.
      const double k = static_cast<double>(uniform_int(1, 3));
      c = k * d;
      alpha = k * beta;
    } else if (n > 1 && bernoulli(0.3)) {
      // Copy a column so two variables tie.
      A.col(n - 1) = A.col(0);
      c[n - 1] = c[0];
      d[n - 1] = d[0];
    }
    return LFPProblem(A, b, c, d, alpha, beta);
  }

  // Random x in X (requires b > 0 and X bounded).
  Eigen::VectorXd feasible_point(const LFPProblem& p) {
    const Index n = p.num_cols();
    Eigen::VectorXd dir(n);
    for (Index j = 0; j < n; ++j) dir[j] = bernoulli(0.2) ? 0.0 : uniform_real(0.0, 1.0);
    const Eigen::VectorXd ad = p.A() * dir;
    double step = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < p.num_rows(); ++i) {
      if (ad[i] > 0.0) step = std::min(step, p.b()[i] / ad[i]);
    }
    if (!std::isfinite(step)) step = 1.0;
    return uniform_real(0.0, 1.0) * step * dir;
  }

  Index uniform_int(Index lo, Index hi) {
    return std::uniform_int_distribution<Index>(lo, hi)(rng_);
  }
  double uniform_real(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  bool bernoulli(double p) { return std::bernoulli_distribution(p)(rng_); }
  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
  Index max_n_;
  Index max_m_;
};

// The optimal face of the transformed primal in standard form, variables
// (x_bar, t, u_bar):  [A -b I; d' beta 0; c' alpha 0] = (0, 1, theta*).
inline Polyhedron primal_optimal_face(const LFPProblem& p, double theta_star) {
  const Index m = p.num_rows();
  const Index n = p.num_cols();
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(m + 2, n + 1 + m);
  Eigen::VectorXd r = Eigen::VectorXd::Zero(m + 2);
  M.block(0, 0, m, n) = p.A();
  M.block(0, n, m, 1) = -p.b();
  M.block(0, n + 1, m, m) = Eigen::MatrixXd::Identity(m, m);
  M.block(m, 0, 1, n) = p.d().transpose();
  M(m, n) = p.beta();
  r[m] = 1.0;
  M.block(m + 1, 0, 1, n) = p.c().transpose();
  M(m + 1, n) = p.alpha();
  r[m + 1] = theta_star;
  return Polyhedron(M, r);
}

// The optimal face of the dual with z pinned to theta*, variables (y, v):
//   [A' -I] (y, v) = c - d theta*,   -b'y = alpha - beta theta*.
inline Polyhedron dual_optimal_face(const LFPProblem& p, double theta_star) {
  const Index m = p.num_rows();
  const Index n = p.num_cols();
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n + 1, m + n);
  Eigen::VectorXd r(n + 1);
  M.block(0, 0, n, m) = p.A().transpose();
  M.block(0, m, n, n) = -Eigen::MatrixXd::Identity(n, n);
  r.head(n) = p.c() - p.d() * theta_star;
  M.block(n, 0, 1, m) = -p.b().transpose();
  r[n] = p.alpha() - p.beta() * theta_star;
  return Polyhedron(M, r);
}

inline IndexSet slice(const IndexSet& s, Index begin, Index end) {
  IndexSet out;
  for (Index k : s) {
    if (k >= begin && k < end) out.push_back(k - begin);
  }
  return out;
}

// Feasible dual points: optimal vertices of random objectives over the dual
// feasible set, and their convex combinations.
inline std::vector<Eigen::VectorXd> dual_samples(const LFPProblem& p,
                                          InstanceGenerator& gen) {
  const LinearProgram dual = build_dual_lp(p);
  std::vector<Eigen::VectorXd> out;
  for (int k = 0; k < 4; ++k) {
    Eigen::VectorXd objective = Eigen::VectorXd::Zero(dual.num_cols());
    for (Index i = 0; i < p.num_rows(); ++i) objective[i] = gen.uniform_real(0.0, 3.0);
    objective[p.num_rows()] = 1.0;
    LinearProgram lp(Sense::Minimize, objective);
    for (const Row& row : dual.rows()) lp.add_row(row.coeffs, row.relation, row.rhs);
    lp.set_bound(p.num_rows(), Bound::free());
    const LPOutcome outcome = solve_lp(lp);
    if (outcome.optimal()) out.push_back(*outcome.point);
  }
  const std::size_t base = out.size();
  for (std::size_t a = 0; a < base; ++a) {
    for (std::size_t b = a + 1; b < base; ++b) {
      const double lambda = gen.uniform_real(0.0, 1.0);
      out.push_back(lambda * out[a] + (1.0 - lambda) * out[b]);
    }
  }
  return out;
}

// Random {x >= 0 : A x = b}. With allow_empty some right-hand sides are
// scrambled, which usually empties the set.
inline Polyhedron random_polyhedron(std::mt19937& rng, bool allow_empty) {
  std::uniform_int_distribution<Index> dim_n(1, 6), dim_m(1, 4);
  std::uniform_int_distribution<int> coef(-3, 3), val(0, 3);
  std::bernoulli_distribution coin(0.3);
  const Index n = dim_n(rng);
  const Index m = dim_m(rng);
  Eigen::MatrixXd A(m, n);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) A(i, j) = coef(rng);
  }
  Eigen::VectorXd x0(n);
  for (Index j = 0; j < n; ++j) x0[j] = coin(rng) ? 0.0 : val(rng);
  Eigen::VectorXd b = A * x0;
  if (coin(rng)) {
    // Force the zero coordinates of x0 to vanish on all of P.
    Eigen::RowVectorXd forcing = Eigen::RowVectorXd::Zero(n);
    for (Index j = 0; j < n; ++j) {
      if (x0[j] == 0.0) forcing[j] = 1.0;
    }
    A.conservativeResize(m + 1, Eigen::NoChange);
    A.row(m) = forcing;
    b.conservativeResize(m + 1);
    b[m] = 0.0;
  }
  if (allow_empty && coin(rng)) {
    for (Index i = 0; i < b.size(); ++i) b[i] = coef(rng);
  }
  return Polyhedron(A, b);
}

inline bool phase_one_infeasible(const Polyhedron& poly) {
  LinearProgram lp(Sense::Minimize, Eigen::VectorXd::Zero(poly.dim()));
  for (Index i = 0; i < poly.num_rows(); ++i) {
    lp.add_row(poly.A_eq().row(i).transpose(), Relation::Equal, poly.b_eq()[i]);
  }
  return solve_lp(lp).status == LPStatus::Infeasible;
}

}  // namespace lfpscsc::testing

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "lfpscsc/error.hpp"
#include "lfpscsc/linear_program.hpp"

namespace lfpscsc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Column entries at or below this magnitude are never pivoted on.
constexpr double kPivotTol = 1e-9;
// Minimum entry used to pivot a zero-level artificial out of the basis.
constexpr double kDriveOutTol = 1e-7;
constexpr double kDegenerateStep = 1e-12;
constexpr double kMinRcond = 1e-13;
constexpr int kRefactorInterval = 50;
// Relative size of the random bound shifts applied at degenerate vertices,
// and how often one variable's bound may be shifted within a phase.
constexpr double kPerturbation = 1e-7;
constexpr int kMaxShifts = 8;
// Harris band width in units of feas_tol.
constexpr double kHarrisFactor = 100.0;

enum class VarState : unsigned char { Basic, AtLower, AtUpper, AtZero };

enum class PhaseResult { Optimal, Unbounded, IterationLimit, Numerical };

// Bounded-variable primal simplex over the standard form
//   a * x = b,  lo <= x <= hi
// whose columns are [structural | slack | artificial]. Greater-or-equal
// rows are negated into less-or-equal rows before slacks are appended.
//
// When `perturb` is set, a basic variable sitting on a bound at a degenerate
// pivot gets that bound widened by a small random amount. The true bounds
// are restored at the end of each phase and primal feasibility is recovered
// with dual simplex pivots.
class Tableau {
 public:
  Tableau(const LinearProgram& lp, const SolverOptions& opts, bool perturb,
          long iterations_used = 0)
      : lp_(lp),
        opts_(opts),
        m_(lp.num_rows()),
        n_struct_(lp.num_cols()),
        iteration_cap_(opts.iteration_cap(lp)),
        iterations_(iterations_used),
        perturb_(perturb) {
    Index num_slack = 0;
    for (const Row& row : lp.rows()) {
      if (row.relation != Relation::Equal) ++num_slack;
    }
    art_begin_ = n_struct_ + num_slack;
    n_total_ = art_begin_ + m_;

    a_ = Eigen::MatrixXd::Zero(m_, n_total_);
    b_.resize(m_);
    lo_.assign(static_cast<std::size_t>(n_total_), 0.0);
    hi_.assign(static_cast<std::size_t>(n_total_), kInf);
    slack_of_row_.assign(static_cast<std::size_t>(m_), -1);

    Index slack = n_struct_;
    for (Index i = 0; i < m_; ++i) {
      const Row& row = lp.rows()[static_cast<std::size_t>(i)];
      const double sign = row.relation == Relation::GreaterEqual ? -1.0 : 1.0;
      a_.row(i).head(n_struct_) = sign * row.coeffs.transpose();
      b_[i] = sign * row.rhs;
      if (row.relation != Relation::Equal) {
        a_(i, slack) = 1.0;
        slack_of_row_[static_cast<std::size_t>(i)] = slack;
        ++slack;
      }
    }
    for (Index j = 0; j < n_struct_; ++j) {
      const Bound& bound = lp.bounds()[static_cast<std::size_t>(j)];
      lo_[static_cast<std::size_t>(j)] = bound.lower();
      hi_[static_cast<std::size_t>(j)] = bound.upper();
    }
    true_lo_ = lo_;
    true_hi_ = hi_;
    shifts_.assign(u(art_begin_), 0);
  }

  // True when the outcome reflects numerical trouble rather than the cap.
  bool numerical_failure() const { return numerical_failure_; }
  bool perturbed() const { return ever_perturbed_; }
  long iterations() const { return iterations_; }

  LPOutcome solve() {
    LPOutcome outcome;
    initialize_phase_one();
    if (!refactor()) return fail(PhaseResult::Numerical, outcome);

    Eigen::VectorXd phase_one_cost = Eigen::VectorXd::Zero(n_total_);
    for (Index j = art_begin_; j < n_total_; ++j) {
      if (hi_[static_cast<std::size_t>(j)] > 0.0) phase_one_cost[j] = 1.0;
    }
    PhaseResult result = run_phase(phase_one_cost);
    if (result != PhaseResult::Optimal) return fail(result, outcome);
    if (!refactor()) return fail(PhaseResult::Numerical, outcome);

    double infeasibility = 0.0;
    for (Index j = art_begin_; j < n_total_; ++j) {
      infeasibility += std::abs(x_[j]);
    }
    if (infeasibility > opts_.feas_tol) {
      return finish(LPStatus::Infeasible, outcome);
    }

    drive_out_artificials();
    if (!refactor()) return fail(PhaseResult::Numerical, outcome);

    Eigen::VectorXd phase_two_cost = Eigen::VectorXd::Zero(n_total_);
    phase_two_cost.head(n_struct_) = lp_.sense() == Sense::Maximize
                                         ? Eigen::VectorXd(-lp_.objective())
                                         : lp_.objective();
    result = run_phase(phase_two_cost);
    if (result == PhaseResult::Unbounded) return finish(LPStatus::Unbounded, outcome);
    if (result != PhaseResult::Optimal) return fail(result, outcome);
    if (!refactor()) return fail(PhaseResult::Numerical, outcome);

    Eigen::VectorXd point = x_.head(n_struct_);
    // A point that fails the feasibility certificate after a fresh
    // factorization is numerical trouble, not an optimum.
    if (lp_.max_violation(point) > opts_.feas_tol) {
      return fail(PhaseResult::Numerical, outcome);
    }
    outcome.objective = lp_.objective_value(point);
    outcome.point = std::move(point);
    return finish(LPStatus::Optimal, outcome);
  }

 private:
  std::size_t u(Index j) const { return static_cast<std::size_t>(j); }

  LPOutcome fail(PhaseResult result, LPOutcome& outcome) {
    numerical_failure_ = result == PhaseResult::Numerical;
    return finish(LPStatus::IterationLimit, outcome);
  }

  LPOutcome finish(LPStatus status, LPOutcome& outcome) const {
    outcome.status = status;
    outcome.iterations = iterations_;
    if (status != LPStatus::Optimal) {
      outcome.point.reset();
      outcome.objective.reset();
    }
    return outcome;
  }

  void initialize_phase_one() {
    x_ = Eigen::VectorXd::Zero(n_total_);
    state_.assign(u(n_total_), VarState::AtLower);
    for (Index j = 0; j < art_begin_; ++j) {
      const double lo = lo_[u(j)];
      const double hi = hi_[u(j)];
      if (std::isfinite(lo)) {
        x_[j] = lo;
        state_[u(j)] = VarState::AtLower;
      } else if (std::isfinite(hi)) {
        x_[j] = hi;
        state_[u(j)] = VarState::AtUpper;
      } else {
        x_[j] = 0.0;
        state_[u(j)] = VarState::AtZero;
      }
    }

    const Eigen::VectorXd residual =
        b_ - a_.leftCols(art_begin_) * x_.head(art_begin_);
    head_.assign(u(m_), -1);
    for (Index i = 0; i < m_; ++i) {
      const Index art = art_begin_ + i;
      const Index slack = slack_of_row_[u(i)];
      if (slack >= 0 && residual[i] >= 0.0) {
        // The row's own slack absorbs the residual; its artificial is unused.
        a_(i, art) = 1.0;
        hi_[u(art)] = 0.0;
        head_[u(i)] = slack;
        state_[u(slack)] = VarState::Basic;
      } else {
        a_(i, art) = residual[i] >= 0.0 ? 1.0 : -1.0;
        head_[u(i)] = art;
        state_[u(art)] = VarState::Basic;
      }
    }
  }

  // Recomputes B^-1 A and the basic values from the original data.
  bool refactor() {
    if (m_ == 0) {
      tab_.resize(0, n_total_);
      return true;
    }
    Eigen::MatrixXd basis(m_, m_);
    for (Index i = 0; i < m_; ++i) basis.col(i) = a_.col(head_[u(i)]);
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(basis);
    if (!(lu.rcond() > kMinRcond)) return false;

    tab_ = lu.solve(a_);
    Eigen::VectorXd rhs = b_;
    for (Index j = 0; j < n_total_; ++j) {
      if (state_[u(j)] != VarState::Basic && x_[j] != 0.0) {
        rhs -= a_.col(j) * x_[j];
      }
    }
    const Eigen::VectorXd basic_values = lu.solve(rhs);
    for (Index i = 0; i < m_; ++i) x_[head_[u(i)]] = basic_values[i];
    return true;
  }

  void pivot(Index row, Index col) {
    const Eigen::VectorXd column = tab_.col(col);
    const Eigen::RowVectorXd pivot_row = tab_.row(row) / column[row];
    tab_.noalias() -= column * pivot_row;
    tab_.row(row) = pivot_row;
    head_[u(row)] = col;
    state_[u(col)] = VarState::Basic;
  }

  void drive_out_artificials() {
    for (Index i = 0; i < m_; ++i) {
      if (head_[u(i)] < art_begin_) continue;
      Index best = -1;
      double best_abs = kDriveOutTol;
      for (Index j = 0; j < art_begin_; ++j) {
        if (state_[u(j)] == VarState::Basic) continue;
        const double value = std::abs(tab_(i, j));
        if (value > best_abs) {
          best_abs = value;
          best = j;
        }
      }
      if (best < 0) continue;  // redundant row; artificial stays basic at 0
      const Index art = head_[u(i)];
      pivot(i, best);
      state_[u(art)] = VarState::AtLower;
      x_[art] = 0.0;
    }
    for (Index j = art_begin_; j < n_total_; ++j) {
      hi_[u(j)] = 0.0;
      if (state_[u(j)] != VarState::Basic) x_[j] = 0.0;
    }
  }

  PhaseResult run_phase(const Eigen::VectorXd& cost) {
    const PhaseResult result = iterate(cost);
    if (perturbed_now_) remove_perturbation();
    if (result != PhaseResult::Optimal) return result;
    if (!refactor()) return PhaseResult::Numerical;
    const PhaseResult cleaned = restore_feasibility(cost);
    if (cleaned != PhaseResult::Optimal) return cleaned;
    const bool saved = perturb_;
    perturb_ = false;
    const PhaseResult polished = iterate(cost);
    perturb_ = saved;
    return polished;
  }

  // Widens the active bound of every basic structural or slack variable that
  // sits on it. Returns false when nothing changed.
  bool perturb_degenerate_basics() {
    std::uniform_real_distribution<double> jitter(1.0, 2.0);
    bool changed = false;
    for (Index i = 0; i < m_; ++i) {
      const Index j = head_[u(i)];
      if (j >= art_begin_ || shifts_[u(j)] >= kMaxShifts) continue;
      const double lo = lo_[u(j)];
      const double hi = hi_[u(j)];
      if (std::isfinite(lo) && x_[j] - lo <= opts_.feas_tol) {
        const double base = std::min(lo, x_[j]);
        lo_[u(j)] = base - kPerturbation * (1.0 + std::abs(base)) * jitter(rng_);
        ++shifts_[u(j)];
        changed = true;
      } else if (std::isfinite(hi) && hi - x_[j] <= opts_.feas_tol) {
        const double base = std::max(hi, x_[j]);
        hi_[u(j)] = base + kPerturbation * (1.0 + std::abs(base)) * jitter(rng_);
        ++shifts_[u(j)];
        changed = true;
      }
    }
    perturbed_now_ = perturbed_now_ || changed;
    ever_perturbed_ = ever_perturbed_ || changed;
    return changed;
  }

  // Puts the true bounds back and moves nonbasic variables onto them.
  void remove_perturbation() {
    for (Index j = 0; j < art_begin_; ++j) {
      lo_[u(j)] = true_lo_[u(j)];
      hi_[u(j)] = true_hi_[u(j)];
      if (state_[u(j)] == VarState::AtLower) x_[j] = lo_[u(j)];
      if (state_[u(j)] == VarState::AtUpper) x_[j] = hi_[u(j)];
    }
    std::fill(shifts_.begin(), shifts_.end(), 0);
    perturbed_now_ = false;
  }

  // Dual simplex on a dual-feasible basis until the basic values are back
  // within their bounds.
  PhaseResult restore_feasibility(const Eigen::VectorXd& cost) {
    const double threshold = 0.5 * opts_.feas_tol;
    int since_refactor = 0;
    while (true) {
      Index row = -1;
      double worst = threshold;
      for (Index i = 0; i < m_; ++i) {
        const Index j = head_[u(i)];
        const double violation = std::max(lo_[u(j)] - x_[j], x_[j] - hi_[u(j)]);
        if (violation > worst) {
          worst = violation;
          row = i;
        }
      }
      if (row < 0) return PhaseResult::Optimal;
      if (iterations_ >= iteration_cap_) return PhaseResult::IterationLimit;
      ++iterations_;

      const Index leaving = head_[u(row)];
      const bool raise = x_[leaving] < lo_[u(leaving)];
      const double target = raise ? lo_[u(leaving)] : hi_[u(leaving)];
      const double want = raise ? 1.0 : -1.0;

      Eigen::VectorXd basic_cost(m_);
      for (Index i = 0; i < m_; ++i) basic_cost[i] = cost[head_[u(i)]];
      const Eigen::RowVectorXd reduced =
          cost.transpose() - basic_cost.transpose() * tab_;

      // Moving nonbasic j by s * t changes the leaving value by
      // -tab(row, j) * s * t. Harris pass on the reduced costs, then the
      // largest pivot within the relaxed ratio.
      std::vector<double> ratios(u(n_total_), kInf);
      std::vector<double> signs(u(n_total_), 0.0);
      double relaxed = kInf;
      for (Index j = 0; j < n_total_; ++j) {
        const VarState st = state_[u(j)];
        if (st == VarState::Basic || !(hi_[u(j)] > lo_[u(j)])) continue;
        const double alpha = tab_(row, j);
        if (std::abs(alpha) <= kPivotTol) continue;
        double s = 0.0;
        if (st == VarState::AtLower) {
          s = 1.0;
        } else if (st == VarState::AtUpper) {
          s = -1.0;
        } else {
          s = alpha * want < 0.0 ? 1.0 : -1.0;
        }
        if (-alpha * s * want <= 0.0) continue;
        const double slack =
            st == VarState::AtZero ? std::abs(reduced[j]) : std::max(0.0, s * reduced[j]);
        ratios[u(j)] = slack / std::abs(alpha);
        signs[u(j)] = s;
        relaxed = std::min(relaxed, (slack + opts_.opt_tol) / std::abs(alpha));
      }
      Index entering = -1;
      double direction = 0.0;
      for (Index j = 0; j < n_total_; ++j) {
        if (!(ratios[u(j)] <= relaxed)) continue;
        if (entering < 0 || std::abs(tab_(row, j)) > std::abs(tab_(row, entering))) {
          entering = j;
          direction = signs[u(j)];
        }
      }
      if (entering < 0) return PhaseResult::Numerical;

      const Eigen::VectorXd column = tab_.col(entering);
      const double step = (target - x_[leaving]) / (-column[row] * direction);
      x_[entering] += direction * step;
      for (Index i = 0; i < m_; ++i) {
        x_[head_[u(i)]] -= direction * column[i] * step;
      }
      x_[leaving] = target;
      state_[u(leaving)] = raise ? VarState::AtLower : VarState::AtUpper;
      pivot(row, entering);
      if (++since_refactor >= kRefactorInterval) {
        since_refactor = 0;
        if (!refactor()) return PhaseResult::Numerical;
      }
    }
  }

  PhaseResult iterate(const Eigen::VectorXd& cost) {
    const long degenerate_limit = 2L * static_cast<long>(m_ + n_struct_);
    long degenerate_run = 0;
    int since_refactor = 0;
    bool fresh = false;

    while (true) {
      const bool bland = degenerate_run > degenerate_limit;

      Eigen::VectorXd basic_cost(m_);
      for (Index i = 0; i < m_; ++i) basic_cost[i] = cost[head_[u(i)]];
      const Eigen::RowVectorXd reduced =
          cost.transpose() - basic_cost.transpose() * tab_;

      Index entering = -1;
      double direction = 0.0;
      double best_score = 0.0;
      for (Index j = 0; j < n_total_; ++j) {
        const VarState st = state_[u(j)];
        if (st == VarState::Basic || !(hi_[u(j)] > lo_[u(j)])) continue;
        const double d = reduced[j];
        double dir = 0.0;
        if (st == VarState::AtLower && d < -opts_.opt_tol) {
          dir = 1.0;
        } else if (st == VarState::AtUpper && d > opts_.opt_tol) {
          dir = -1.0;
        } else if (st == VarState::AtZero && std::abs(d) > opts_.opt_tol) {
          dir = d < 0.0 ? 1.0 : -1.0;
        }
        if (dir == 0.0) continue;
        if (bland) {
          entering = j;
          direction = dir;
          break;
        }
        if (std::abs(d) > best_score) {
          best_score = std::abs(d);
          entering = j;
          direction = dir;
        }
      }
      if (entering < 0) return PhaseResult::Optimal;
      if (iterations_ >= iteration_cap_) return PhaseResult::IterationLimit;
      ++iterations_;

      // Ratio test: basic i moves at rate -direction * column[i]. Outside
      // Bland mode the Harris pass admits every row whose ratio is within the
      // step allowed by bounds relaxed by harris_tol, then takes the largest
      // pivot among them.
      const Eigen::VectorXd column = tab_.col(entering);
      const double harris_tol = bland ? 0.0 : kHarrisFactor * opts_.feas_tol;
      std::vector<double> ratios(u(m_), kInf);
      double min_ratio = kInf;
      double relaxed = kInf;
      for (Index i = 0; i < m_; ++i) {
        if (std::abs(column[i]) <= kPivotTol) continue;
        const double rate = -direction * column[i];
        const Index basic = head_[u(i)];
        double room = kInf;
        if (rate < 0.0 && std::isfinite(lo_[u(basic)])) {
          room = x_[basic] - lo_[u(basic)];
        } else if (rate > 0.0 && std::isfinite(hi_[u(basic)])) {
          room = hi_[u(basic)] - x_[basic];
        }
        if (!std::isfinite(room)) continue;
        const double ratio = std::max(room, 0.0) / std::abs(rate);
        ratios[u(i)] = ratio;
        min_ratio = std::min(min_ratio, ratio);
        relaxed = std::min(relaxed, std::max(room + harris_tol, 0.0) / std::abs(rate));
      }

      Index leaving = -1;
      if (std::isfinite(min_ratio)) {
        const double tie = std::max(relaxed, min_ratio + 1e-12 + 1e-9 * min_ratio);
        for (Index i = 0; i < m_; ++i) {
          if (!(ratios[u(i)] <= tie)) continue;
          if (leaving < 0) {
            leaving = i;
            continue;
          }
          if (bland ? head_[u(i)] < head_[u(leaving)]
                    : std::abs(column[i]) > std::abs(column[leaving])) {
            leaving = i;
          }
        }
      }

      const double range = hi_[u(entering)] - lo_[u(entering)];
      const bool flip = std::isfinite(range) && range <= min_ratio;
      if (!flip && leaving < 0) {
        // Confirm the ray on a fresh factorization before reporting it.
        if (since_refactor == 0 && fresh) return PhaseResult::Unbounded;
        --iterations_;
        since_refactor = 0;
        if (!refactor()) return PhaseResult::Numerical;
        fresh = true;
        continue;
      }
      fresh = false;
      if (perturb_ && !flip && min_ratio <= kDegenerateStep && perturb_degenerate_basics()) {
        --iterations_;
        continue;
      }

      const double step = flip ? range : ratios[u(leaving)];
      x_[entering] += direction * step;
      for (Index i = 0; i < m_; ++i) {
        x_[head_[u(i)]] -= direction * column[i] * step;
      }

      if (flip) {
        state_[u(entering)] =
            direction > 0.0 ? VarState::AtUpper : VarState::AtLower;
        x_[entering] = direction > 0.0 ? hi_[u(entering)] : lo_[u(entering)];
      } else {
        const Index out = head_[u(leaving)];
        const double rate = -direction * column[leaving];
        if (rate < 0.0) {
          state_[u(out)] = VarState::AtLower;
          x_[out] = lo_[u(out)];
        } else {
          state_[u(out)] = VarState::AtUpper;
          x_[out] = hi_[u(out)];
        }
        pivot(leaving, entering);
        if (++since_refactor >= kRefactorInterval) {
          since_refactor = 0;
          if (!refactor()) return PhaseResult::Numerical;
        }
      }

      degenerate_run = step <= kDegenerateStep ? degenerate_run + 1 : 0;
    }
  }

  const LinearProgram& lp_;
  const SolverOptions& opts_;
  Index m_;
  Index n_struct_;
  Index art_begin_ = 0;
  Index n_total_ = 0;
  long iteration_cap_;
  long iterations_ = 0;
  bool perturb_;
  bool perturbed_now_ = false;
  bool ever_perturbed_ = false;
  bool numerical_failure_ = false;
  std::mt19937 rng_{0x5eed};

  Eigen::MatrixXd a_;
  Eigen::VectorXd b_;
  std::vector<double> lo_;
  std::vector<double> hi_;
  std::vector<double> true_lo_;
  std::vector<double> true_hi_;
  std::vector<int> shifts_;
  std::vector<Index> slack_of_row_;

  Eigen::MatrixXd tab_;
  std::vector<Index> head_;
  std::vector<VarState> state_;
  Eigen::VectorXd x_;
};

}  // namespace

LPOutcome solve_lp(const LinearProgram& lp, const SolverOptions& opts) {
  opts.validate();
  Tableau perturbed(lp, opts, true);
  LPOutcome outcome = perturbed.solve();
  if (outcome.status == LPStatus::IterationLimit && perturbed.numerical_failure() &&
      perturbed.perturbed()) {
    outcome = Tableau(lp, opts, false, perturbed.iterations()).solve();
  }
  return outcome;
}

}  // namespace lfpscsc

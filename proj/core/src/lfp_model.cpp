#include "lfpscsc/lfp_model.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "lfpscsc/error.hpp"

namespace lfpscsc {

LFPProblem::LFPProblem(Eigen::MatrixXd A, Eigen::VectorXd b, Eigen::VectorXd c,
                       Eigen::VectorXd d, double alpha, double beta)
    : A_(std::move(A)),
      b_(std::move(b)),
      c_(std::move(c)),
      d_(std::move(d)),
      alpha_(alpha),
      beta_(beta) {
  const Index m = A_.rows();
  const Index n = A_.cols();
  if (m < 1 || n < 1) {
    throw Error(ErrorCode::DimensionError, "A must have at least one row and one column");
  }
  if (b_.size() != m) {
    throw Error(ErrorCode::DimensionError,
                "b has " + std::to_string(b_.size()) + " entries but A has " +
                    std::to_string(m) + " rows");
  }
  if (c_.size() != n || d_.size() != n) {
    throw Error(ErrorCode::DimensionError,
                "c and d must have " + std::to_string(n) + " entries");
  }
  if (!A_.allFinite() || !b_.allFinite() || !c_.allFinite() ||
      !d_.allFinite() || !std::isfinite(alpha_) || !std::isfinite(beta_)) {
    throw Error(ErrorCode::ValueError, "problem data must be finite");
  }
}

PrimalPoint make_primal_point(const LFPProblem& p, const Eigen::VectorXd& x) {
  return PrimalPoint{x, p.b() - p.A() * x};
}

DualPoint make_dual_point(const LFPProblem& p, const Eigen::VectorXd& y,
                          double z) {
  return DualPoint{y, z, p.A().transpose() * y + p.d() * z - p.c()};
}

double primal_infeasibility(const LFPProblem& p, const PrimalPoint& point) {
  double worst = 0.0;
  worst = std::max(worst, -point.x.minCoeff());
  worst = std::max(worst, -point.u.minCoeff());
  worst = std::max(worst,
                   (p.A() * point.x + point.u - p.b()).cwiseAbs().maxCoeff());
  return worst;
}

double dual_infeasibility(const LFPProblem& p, const DualPoint& point) {
  double worst = 0.0;
  worst = std::max(worst, -point.y.minCoeff());
  worst = std::max(worst, -point.v.minCoeff());
  worst = std::max(worst, (p.A().transpose() * point.y + p.d() * point.z -
                           point.v - p.c())
                              .cwiseAbs()
                              .maxCoeff());
  worst = std::max(worst, std::abs(-p.b().dot(point.y) + p.beta() * point.z -
                                   p.alpha()));
  return worst;
}

double evaluate_objective(const LFPProblem& p, const Eigen::VectorXd& x,
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
  return p.numerator(x) / den;
}

double validate_denominator(const LFPProblem& p, const SolverOptions& opts) {
  LinearProgram lp(Sense::Minimize, p.d());
  for (Index i = 0; i < p.num_rows(); ++i) {
    lp.add_row(p.A().row(i).transpose(), Relation::LessEqual, p.b()[i]);
  }
  const LPOutcome outcome = solve_lp(lp, opts);
  switch (outcome.status) {
    case LPStatus::Optimal: return *outcome.objective + p.beta();
    case LPStatus::Infeasible:
      throw Error(ErrorCode::InfeasibleRegion, "feasible region X is empty");
    case LPStatus::Unbounded:
      throw Error(ErrorCode::UnboundedValidation,
                  "denominator is unbounded below on X");
    case LPStatus::IterationLimit: break;
  }
  throw Error(ErrorCode::IterationLimit,
              "denominator validation hit the iteration limit");
}

namespace {

using nlohmann::json;

double read_number(const json& value, const std::string& where) {
  double number = 0.0;
  if (value.is_number()) {
    number = value.get<double>();
  } else if (value.is_string()) {
    // Accept numeric strings so "NaN"/"Infinity" reach the finiteness check.
    const std::string text = value.get<std::string>();
    char* end = nullptr;
    number = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size()) {
      throw Error(ErrorCode::ParseError, where + " is not a number");
    }
  } else {
    throw Error(ErrorCode::ParseError, where + " is not a number");
  }
  if (!std::isfinite(number)) {
    throw Error(ErrorCode::ValueError, where + " is not finite");
  }
  return number;
}

const json& require(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) {
    throw Error(ErrorCode::ParseError, std::string("missing key \"") + key + "\"");
  }
  return *it;
}

Eigen::VectorXd read_vector(const json& doc, const char* key) {
  const json& value = require(doc, key);
  if (!value.is_array()) {
    throw Error(ErrorCode::ParseError, std::string(key) + " must be an array");
  }
  Eigen::VectorXd out(static_cast<Index>(value.size()));
  for (std::size_t i = 0; i < value.size(); ++i) {
    out[static_cast<Index>(i)] =
        read_number(value[i], std::string(key) + "[" + std::to_string(i) + "]");
  }
  return out;
}

Eigen::MatrixXd read_matrix(const json& doc, const char* key) {
  const json& value = require(doc, key);
  if (!value.is_array()) {
    throw Error(ErrorCode::ParseError, std::string(key) + " must be an array of rows");
  }
  const std::size_t rows = value.size();
  if (rows == 0) return Eigen::MatrixXd(0, 0);
  for (const json& row : value) {
    if (!row.is_array()) {
      throw Error(ErrorCode::ParseError, std::string(key) + " rows must be arrays");
    }
  }
  const std::size_t cols = value[0].size();
  Eigen::MatrixXd out(static_cast<Index>(rows), static_cast<Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    if (value[i].size() != cols) {
      throw Error(ErrorCode::DimensionError,
                  std::string(key) + " row " + std::to_string(i) +
                      " has " + std::to_string(value[i].size()) +
                      " entries, expected " + std::to_string(cols));
    }
    for (std::size_t j = 0; j < cols; ++j) {
      out(static_cast<Index>(i), static_cast<Index>(j)) = read_number(
          value[i][j], std::string(key) + "[" + std::to_string(i) + "][" +
                           std::to_string(j) + "]");
    }
  }
  return out;
}

}  // namespace

LFPProblem parse_problem(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::ParseError, "problem document must be a JSON object");
  }
  Eigen::MatrixXd A = read_matrix(doc, "A");
  Eigen::VectorXd b = read_vector(doc, "b");
  Eigen::VectorXd c = read_vector(doc, "c");
  Eigen::VectorXd d = read_vector(doc, "d");
  const double alpha = read_number(require(doc, "alpha"), "alpha");
  const double beta = read_number(require(doc, "beta"), "beta");
  return LFPProblem(std::move(A), std::move(b), std::move(c), std::move(d),
                    alpha, beta);
}

}  // namespace lfpscsc

#include <gtest/gtest.h>

#include <string>

#include "lfpscsc/error.hpp"
#include "lfpscsc/lfp_model.hpp"
#include "support/error_code.hpp"
#include "support/fixtures.hpp"

namespace lfpscsc {
namespace {

using testing::code_of;
using testing::golden_problem;

TEST(EvaluateObjective, GoldenPoints) {
  const LFPProblem p = golden_problem();
  EXPECT_NEAR(evaluate_objective(p, Eigen::Vector2d(0.8, 3.6)), 4.0 / 3.0, 1e-12);
  EXPECT_NEAR(evaluate_objective(p, Eigen::Vector2d(1.0, 4.0)), 4.0 / 3.0, 1e-12);
  EXPECT_NEAR(evaluate_objective(p, Eigen::Vector2d(0.0, 0.0)), 1.2, 1e-12);
}

TEST(EvaluateObjective, NonpositiveDenominator) {
  // d.x + beta = -1 + 1 = 0 at x = 1.
  const LFPProblem p(Eigen::MatrixXd::Ones(1, 1), Eigen::VectorXd::Ones(1),
                     Eigen::VectorXd::Ones(1), Eigen::VectorXd::Constant(1, -1.0),
                     0.0, 1.0);
  EXPECT_EQ(code_of([&] { evaluate_objective(p, Eigen::VectorXd::Ones(1)); }),
            ErrorCode::NonpositiveDenominator);
}

TEST(ValidateDenominator, GoldenMatchesVertexMinimum) {
  const LFPProblem p = golden_problem();
  // Oracle: minimum of d.x + beta over the enumerated vertices of X.
  LinearProgram region(Sense::Minimize, p.d());
  for (Index i = 0; i < p.num_rows(); ++i) {
    region.add_row(p.A().row(i).transpose(), Relation::LessEqual, p.b()[i]);
  }
  const auto vertices = testing::enumerate_vertices(region);
  ASSERT_EQ(vertices.size(), 4u);
  double oracle = std::numeric_limits<double>::infinity();
  for (const auto& v : vertices) oracle = std::min(oracle, p.denominator(v));
  EXPECT_DOUBLE_EQ(oracle, 5.0);

  EXPECT_NEAR(validate_denominator(p), oracle, 1e-9);
}

TEST(ValidateDenominator, ConstantDenominator) {
  const LFPProblem base = golden_problem();
  const LFPProblem p(base.A(), base.b(), base.c(), Eigen::Vector2d::Zero(),
                     base.alpha(), 1.0);
  EXPECT_NEAR(validate_denominator(p), 1.0, 1e-12);
}

TEST(ValidateDenominator, EmptyRegion) {
  const LFPProblem p(Eigen::MatrixXd::Ones(1, 1), Eigen::VectorXd::Constant(1, -1.0),
                     Eigen::VectorXd::Ones(1), Eigen::VectorXd::Ones(1), 0.0, 1.0);
  EXPECT_EQ(code_of([&] { validate_denominator(p); }), ErrorCode::InfeasibleRegion);
}

TEST(ValidateDenominator, UnboundedBelow) {
  // -x <= 1 leaves x unbounded above; d = -1 drives the denominator down.
  const LFPProblem p(Eigen::MatrixXd::Constant(1, 1, -1.0), Eigen::VectorXd::Ones(1),
                     Eigen::VectorXd::Ones(1), Eigen::VectorXd::Constant(1, -1.0),
                     0.0, 5.0);
  EXPECT_EQ(code_of([&] { validate_denominator(p); }),
            ErrorCode::UnboundedValidation);
}

TEST(LFPProblem, RejectsInconsistentData) {
  EXPECT_EQ(code_of([] {
              LFPProblem(Eigen::MatrixXd::Ones(2, 2), Eigen::VectorXd::Ones(3),
                         Eigen::VectorXd::Ones(2), Eigen::VectorXd::Ones(2), 0, 1);
            }),
            ErrorCode::DimensionError);
  EXPECT_EQ(code_of([] {
              LFPProblem(Eigen::MatrixXd(0, 0), Eigen::VectorXd(0),
                         Eigen::VectorXd(0), Eigen::VectorXd(0), 0, 1);
            }),
            ErrorCode::DimensionError);
  EXPECT_EQ(code_of([] {
              LFPProblem(Eigen::MatrixXd::Ones(1, 1), Eigen::VectorXd::Ones(1),
                         Eigen::VectorXd::Ones(1), Eigen::VectorXd::Ones(1),
                         std::numeric_limits<double>::infinity(), 1);
            }),
            ErrorCode::ValueError);
}

TEST(ParseProblem, GoldenDocument) {
  const LFPProblem p = parse_problem(R"({
    "A": [[2, 1], [-2, 1]],
    "b": [6, 2],
    "c": [6, 3],
    "d": [5, 2],
    "alpha": 6,
    "beta": 5
  })");
  const LFPProblem expected = golden_problem();
  EXPECT_EQ(p.A(), expected.A());
  EXPECT_EQ(p.b(), expected.b());
  EXPECT_EQ(p.c(), expected.c());
  EXPECT_EQ(p.d(), expected.d());
  EXPECT_EQ(p.alpha(), 6.0);
  EXPECT_EQ(p.beta(), 5.0);
}

TEST(ParseProblem, Errors) {
  EXPECT_EQ(code_of([] {
              parse_problem(R"({"A": [[2, 1], [-2, 1]], "b": [6, 2, 1],
                 "c": [6, 3], "d": [5, 2], "alpha": 6, "beta": 5})");
            }),
            ErrorCode::DimensionError);
  EXPECT_EQ(code_of([] {
              parse_problem(R"({"A": [[2, 1], [-2, 1]], "b": [6, 2],
                 "c": [6, 3], "d": [5, 2], "alpha": "NaN", "beta": 5})");
            }),
            ErrorCode::ValueError);
  EXPECT_EQ(code_of([] {
              parse_problem(R"({"A": [[2, 1], [-2]], "b": [6, 2],
                 "c": [6, 3], "d": [5, 2], "alpha": 6, "beta": 5})");
            }),
            ErrorCode::DimensionError);
  EXPECT_EQ(code_of([] { parse_problem(R"({"A": [[1]], "b": [1]})"); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_problem("{not json"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] {
              parse_problem(R"({"A": [[1]], "b": [1], "c": [1], "d": [1],
                 "alpha": "six", "beta": 1})");
            }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_problem("[1, 2]"); }), ErrorCode::ParseError);
}

TEST(LfpModelProperty, ObjectiveScalesWithNumerator) {
  testing::InstanceGenerator gen(11);
  for (int trial = 0; trial < 100; ++trial) {
    const LFPProblem p = gen.next();
    const double k = gen.uniform_real(0.1, 10.0);
    const LFPProblem scaled(p.A(), p.b(), k * p.c(), p.d(), k * p.alpha(), p.beta());
    const Eigen::VectorXd x = gen.feasible_point(p);
    const double f = evaluate_objective(p, x);
    EXPECT_NEAR(evaluate_objective(scaled, x), k * f, 1e-12 * (1 + std::abs(k * f)));
  }
}

TEST(LfpModelProperty, PrimalSlackRecomputes) {
  testing::InstanceGenerator gen(12);
  for (int trial = 0; trial < 100; ++trial) {
    const LFPProblem p = gen.next();
    const PrimalPoint point = make_primal_point(p, gen.feasible_point(p));
    EXPECT_LE((p.b() - p.A() * point.x - point.u).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_LE(primal_infeasibility(p, point), 1e-9);
  }
}

}  // namespace
}  // namespace lfpscsc

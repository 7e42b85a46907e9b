#include <benchmark/benchmark.h>

#include <random>

#include "lfpscsc/lfpscsc.hpp"

namespace {

using namespace lfpscsc;

// Bounded instance with b > 0, d >= 0 and beta >= 1 of size n x n.
LFPProblem random_problem(Index n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 5), pos(1, 5), rhs(1, 10), den(0, 4);
  Eigen::MatrixXd A(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) A(i, j) = i == 0 ? pos(rng) : coef(rng);
  }
  Eigen::VectorXd b(n), c(n), d(n);
  for (Index k = 0; k < n; ++k) {
    b[k] = rhs(rng);
    c[k] = coef(rng);
    d[k] = den(rng);
  }
  return LFPProblem(A, b, c, d, 1.0, 2.0);
}

void BM_ThetaStar(benchmark::State& state) {
  const LFPProblem p = random_problem(state.range(0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(solve_theta_star(p));
}
BENCHMARK(BM_ThetaStar)->RangeMultiplier(2)->Range(4, 32);

void BM_ApproachOne(benchmark::State& state) {
  const LFPProblem p = random_problem(state.range(0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(approach_one(p));
}
BENCHMARK(BM_ApproachOne)->RangeMultiplier(2)->Range(4, 32);

void BM_ApproachTwo(benchmark::State& state) {
  const LFPProblem p = random_problem(state.range(0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(approach_two(p));
}
BENCHMARK(BM_ApproachTwo)->RangeMultiplier(2)->Range(4, 32);

void BM_SupportOracle(benchmark::State& state) {
  const LFPProblem p = random_problem(state.range(0), 7);
  const Polyhedron face(p.A(), p.A() * Eigen::VectorXd::Ones(p.num_cols()));
  for (auto _ : state) benchmark::DoNotOptimize(coordinate_support_oracle(face));
}
BENCHMARK(BM_SupportOracle)->RangeMultiplier(2)->Range(4, 32);

void BM_RelativeInterior(benchmark::State& state) {
  const LFPProblem p = random_problem(state.range(0), 7);
  const Polyhedron face(p.A(), p.A() * Eigen::VectorXd::Ones(p.num_cols()));
  for (auto _ : state) benchmark::DoNotOptimize(find_relative_interior_point(face));
}
BENCHMARK(BM_RelativeInterior)->RangeMultiplier(2)->Range(4, 32);

}  // namespace

BENCHMARK_MAIN();

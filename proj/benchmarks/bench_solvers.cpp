#include <benchmark/benchmark.h>

#include "kal/lower_bound.hpp"
#include "kal/random_gen.hpp"
#include "kal/rounding.hpp"
#include "kal/solvers.hpp"

namespace {

kal::KnapsackInstance restricted_instance() {
  kal::KnapsackInstance inst;
  inst.weights.assign(13, kal::Rational(8, 13));
  inst.weights.push_back(kal::Rational(169));
  inst.capacity = kal::Rational(176);
  return inst;
}

kal::Objective restricted_objective() {
  kal::Objective c;
  c.coeffs.assign(13, kal::Rational(8, 13));
  c.coeffs.push_back(kal::Rational(1));
  return c;
}

} // namespace

static void BM_KnapsackDpRestricted(benchmark::State& state) {
  const auto inst = restricted_instance();
  const auto c = restricted_objective();
  for (auto _ : state) {
    benchmark::DoNotOptimize(kal::knapsack_opt(inst, c));
  }
}
BENCHMARK(BM_KnapsackDpRestricted);

static void BM_KnapsackBranchBound(benchmark::State& state) {
  kal::SplitMix64 rng(1);
  const auto inst = kal::random_scaled_instance(rng, 18);
  const auto c = kal::random_objective(rng, 18);
  kal::SolveOptions opts;
  opts.dp_capacity_bound = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kal::knapsack_opt(inst, c, opts));
  }
}
BENCHMARK(BM_KnapsackBranchBound);

static void BM_SimplexQPolytope(benchmark::State& state) {
  // The n=3 exhaustive-Q system: 343 rows over 3 variables.
  kal::SplitMix64 rng(2);
  const auto inst = kal::random_scaled_instance(rng, 3);
  const auto c = kal::random_objective(rng, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kal::exhaustive_q_opt(inst, c, kal::Rational(1, 2)));
  }
}
BENCHMARK(BM_SimplexQPolytope)->Unit(benchmark::kMillisecond);

static void BM_CertifyRatio(benchmark::State& state) {
  kal::SplitMix64 rng(3);
  const auto inst = kal::random_scaled_instance(rng, 20);
  const auto c = kal::random_objective(rng, 20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kal::certify_ratio(inst, c, kal::Rational(1, 8)));
  }
}
BENCHMARK(BM_CertifyRatio);

BENCHMARK_MAIN();

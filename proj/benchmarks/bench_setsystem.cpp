#include <benchmark/benchmark.h>

#include "kal/set_system.hpp"

static void BM_BuildFamily(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto sys = kal::build_nw_family(p, d);
    benchmark::DoNotOptimize(sys);
  }
}
BENCHMARK(BM_BuildFamily)->Args({13, 2})->Args({7, 1})->Args({31, 2});

static void BM_VerifyAllPairs(benchmark::State& state) {
  const auto sys = kal::build_nw_family(static_cast<std::uint64_t>(state.range(0)),
                                        static_cast<int>(state.range(1)));
  for (auto _ : state) {
    auto rep = kal::verify_set_system(sys, kal::PairPolicy::all(), 1);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_VerifyAllPairs)->Args({7, 1})->Args({13, 2})->Unit(benchmark::kMillisecond);

static void BM_IntersectionSize(benchmark::State& state) {
  const auto sys = kal::build_nw_family(13, 2);
  const auto& a = sys.sets[0].elements;
  const auto& b = sys.sets[1].elements;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kal::intersection_size(a, b));
  }
}
BENCHMARK(BM_IntersectionSize);

BENCHMARK_MAIN();

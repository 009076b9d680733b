#include <benchmark/benchmark.h>

#include "kal/certificate.hpp"
#include "kal/lower_bound.hpp"

namespace {

kal::LowerBoundParams hard_params() {
  kal::LowerBoundParams params;
  params.p = 13;
  params.epsilon = kal::Rational(1, 16);
  return params;
}

} // namespace

static void BM_VerifyGap(benchmark::State& state) {
  const auto params = hard_params();
  const auto inst = kal::build_instance(params);
  const auto family = kal::build_nw_family(13, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        kal::verify_gap(inst, family.sets[0].elements, params.epsilon));
  }
}
BENCHMARK(BM_VerifyGap);

static void BM_VerifyMidpoint(benchmark::State& state) {
  const auto params = hard_params();
  const auto inst = kal::build_instance(params);
  const auto family = kal::build_nw_family(13, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kal::verify_midpoint(inst, family.sets[0].elements,
                                                  family.sets[1].elements, params.epsilon));
  }
}
BENCHMARK(BM_VerifyMidpoint);

static void BM_CertifySampled(benchmark::State& state) {
  kal::LowerBoundParams params;
  params.p = 11;
  params.epsilon = kal::Rational(1, 16);
  params.strict = false;
  kal::CertifyOptions opts;
  opts.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kal::certify(params, kal::PairPolicy::sample(1, 1000), opts));
  }
}
BENCHMARK(BM_CertifySampled)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

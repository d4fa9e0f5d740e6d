#include <benchmark/benchmark.h>

#include "latpimc/estimators.hpp"
#include "latpimc/rng.hpp"
#include "latpimc/walk_sampler.hpp"

static void BM_EvaluateAll(benchmark::State& state) {
  const auto params = latpimc::make_params(10.0, 100);
  const auto cfg = latpimc::LatticeConfig::striped(100, 10.0);
  latpimc::WalkSampler sampler(params);
  auto rng = latpimc::make_stream(4, 0);
  const auto walk = sampler.sample_closed_walk(0, rng);
  latpimc::ObservableEvaluator ev(params, cfg, static_cast<int>(state.range(0)));
  latpimc::ObservableSample out;
  for (auto _ : state) {
    ev.evaluate(walk, out);
    benchmark::DoNotOptimize(out.tau);
  }
}
BENCHMARK(BM_EvaluateAll)->Arg(0)->Arg(10);

static void BM_KineticOnly(benchmark::State& state) {
  const auto params = latpimc::make_params(10.0, 100);
  latpimc::WalkSampler sampler(params);
  auto rng = latpimc::make_stream(5, 0);
  const auto walk = sampler.sample_closed_walk(0, rng);
  for (auto _ : state) benchmark::DoNotOptimize(latpimc::kinetic_estimator(walk, params));
}
BENCHMARK(BM_KineticOnly);

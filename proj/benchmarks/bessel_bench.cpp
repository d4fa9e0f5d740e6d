#include <benchmark/benchmark.h>

#include "latpimc/bessel.hpp"
#include "latpimc/exact_striped.hpp"

static void BM_BuildTable(benchmark::State& state) {
  const double z = static_cast<double>(state.range(0)) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(latpimc::build_table(z, 64));
}
BENCHMARK(BM_BuildTable)->Arg(2)->Arg(100)->Arg(4000);

static void BM_StepCutoff(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(latpimc::step_cutoff(0.2));
}
BENCHMARK(BM_StepCutoff);

static void BM_StripedMeanPotential(benchmark::State& state) {
  const double beta = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(latpimc::striped::mean_potential(beta, 10.0));
}
BENCHMARK(BM_StripedMeanPotential)->Arg(1)->Arg(100);

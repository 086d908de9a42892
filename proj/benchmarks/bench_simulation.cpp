#include <benchmark/benchmark.h>

#include "gather3d/instance.hpp"
#include "gather3d/monitors.hpp"
#include "gather3d/simulation.hpp"

namespace {

using namespace gather3d;

void BM_run(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(42);
  InstanceOptions io;
  io.n = n;
  io.z_layers = 1;
  const auto robots = random_setup(io, rng);
  SimParams params;
  params.seed = 42;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run(robots, params));
  }
}
BENCHMARK(BM_run)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_evaluate_monitors(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(42);
  InstanceOptions io;
  io.n = n;
  io.z_layers = 1;
  const auto robots = random_setup(io, rng);
  SimParams params;
  params.seed = 42;
  const Trace trace = run(robots, params);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_monitors(trace));
  }
}
BENCHMARK(BM_evaluate_monitors)->Arg(4)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

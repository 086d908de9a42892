#include <benchmark/benchmark.h>

#include <vector>

#include "gather3d/configuration.hpp"
#include "gather3d/geometry.hpp"
#include "gather3d/rng.hpp"

namespace {

using namespace gather3d;

std::vector<Point3> random_points(int n, bool coplanar, Rng& rng) {
  std::vector<Point3> pts;
  pts.reserve(n);
  const double z0 = uniform(rng, -1.0, 1.0);
  for (int i = 0; i < n; ++i)
    pts.push_back({uniform(rng, -5.0, 5.0), uniform(rng, -5.0, 5.0),
                   coplanar ? z0 : uniform(rng, -5.0, 5.0)});
  return pts;
}

void BM_minimum_enclosing_circle(benchmark::State& state) {
  Rng rng(7);
  const auto pts = random_points(static_cast<int>(state.range(0)), true, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimum_enclosing_circle(pts));
  }
}
BENCHMARK(BM_minimum_enclosing_circle)->Arg(3)->Arg(8)->Arg(12);

void BM_compute_circle(benchmark::State& state) {
  Rng rng(11);
  const auto pts = random_points(static_cast<int>(state.range(0)), true, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_circle(pts));
  }
}
BENCHMARK(BM_compute_circle)->Arg(3)->Arg(8)->Arg(12);

void BM_decompose(benchmark::State& state) {
  Rng rng(13);
  const auto pts = random_points(static_cast<int>(state.range(0)), false, rng);
  const Configuration cfg = Configuration::from_points(pts);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(cfg));
  }
}
BENCHMARK(BM_decompose)->Arg(4)->Arg(12);

}  // namespace

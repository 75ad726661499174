#include "foliate/leafgeom.hpp"

#include <benchmark/benchmark.h>

using namespace foliate;

static void planar_parallel(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(planar_leaf(0.7, PlanarBranch::Outer, 1.001, 6, n));
  st.SetItemsProcessed(st.iterations() * n);
}

static void planar_serial(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(planar_leaf_serial(0.7, PlanarBranch::Outer, 1.001, 6, n));
  st.SetItemsProcessed(st.iterations() * n);
}

static void spatial_parallel(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(spatial_leaf(0.7, SpatialBranch::Paraboloid, {0, 0.999, n, n}));
  st.SetItemsProcessed(st.iterations() * n * n);
}

static void spatial_serial(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(spatial_leaf_serial(0.7, SpatialBranch::Paraboloid, {0, 0.999, n, n}));
  st.SetItemsProcessed(st.iterations() * n * n);
}

static void residual_parallel(benchmark::State& st) {
  auto s = planar_leaf(0.7, PlanarBranch::Inner, -0.999, 0.999, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(max_residual(s));
}

static void residual_serial(benchmark::State& st) {
  auto s = planar_leaf(0.7, PlanarBranch::Inner, -0.999, 0.999, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(max_residual_serial(s));
}

BENCHMARK(planar_parallel)->Range(1 << 10, 1 << 18);
BENCHMARK(planar_serial)->Range(1 << 10, 1 << 18);
BENCHMARK(spatial_parallel)->Range(32, 512);
BENCHMARK(spatial_serial)->Range(32, 512);
BENCHMARK(residual_parallel)->Range(1 << 10, 1 << 18);
BENCHMARK(residual_serial)->Range(1 << 10, 1 << 18);

BENCHMARK_MAIN();

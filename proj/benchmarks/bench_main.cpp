#include <benchmark/benchmark.h>

#include "multiplihedra/counting.hpp"
#include "multiplihedra/enumeration.hpp"
#include "multiplihedra/hull.hpp"
#include "multiplihedra/metric.hpp"

namespace m = multiplihedra;

static void EnumerateBinary(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto trees = m::enumerate_binary(n);
    benchmark::DoNotOptimize(trees);
  }
}
BENCHMARK(EnumerateBinary)->Arg(5)->Arg(7)->Arg(8);

static void CoordinatesAll(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto trees = m::enumerate_binary(n);
  const auto w = m::unit_weights(n);
  for (auto _ : state) {
    for (const auto& t : trees) {
      auto p = m::coordinates_weighted(t, m::Rat(1, 2), w);
      benchmark::DoNotOptimize(p);
    }
  }
}
BENCHMARK(CoordinatesAll)->Arg(5)->Arg(7);

static void BruteForceHullJ4(benchmark::State& state) {
  const auto trees = m::enumerate_binary(4);
  std::vector<m::Point> pts;
  for (const auto& t : trees)
    pts.push_back(m::coordinates_weighted(t, m::Rat(1, 2), m::unit_weights(4)));
  for (auto _ : state) {
    auto hull = m::brute_force_hull(pts);
    benchmark::DoNotOptimize(hull);
  }
}
BENCHMARK(BruteForceHullJ4);

static void VerifyIncidence(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto report = m::verify_realization(n, m::Rat(1, 2), m::unit_weights(n), false);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(VerifyIncidence)->Arg(4)->Arg(5)->Arg(6);

static void MetricInteriorPoints(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto trees = m::enumerate_binary(n);
  for (auto _ : state) {
    for (const auto& t : trees) {
      auto p = m::interior_point(t);
      benchmark::DoNotOptimize(p);
    }
  }
}
BENCHMARK(MetricInteriorPoints)->Arg(5)->Arg(6);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <random>

#include "quivercover/linalg.hpp"

using namespace qc;

namespace {

Matrix random_matrix(std::size_t n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<int>(rng() % 19) - 9;
  return m;
}

void BM_RankParallel(benchmark::State& s) {
  Matrix m = random_matrix(static_cast<std::size_t>(s.range(0)), 1);
  for (auto _ : s) benchmark::DoNotOptimize(rank(m));
}

void BM_RankSerial(benchmark::State& s) {
  Matrix m = random_matrix(static_cast<std::size_t>(s.range(0)), 1);
  for (auto _ : s) benchmark::DoNotOptimize(serial::rank(m));
}

void BM_RrefParallel(benchmark::State& s) {
  Matrix m = random_matrix(static_cast<std::size_t>(s.range(0)), 2);
  for (auto _ : s) benchmark::DoNotOptimize(rref(m));
}

void BM_RrefSerial(benchmark::State& s) {
  Matrix m = random_matrix(static_cast<std::size_t>(s.range(0)), 2);
  for (auto _ : s) benchmark::DoNotOptimize(serial::rref(m));
}

}  // namespace

BENCHMARK(BM_RankParallel)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankSerial)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RrefParallel)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RrefSerial)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

// OpenMP kernels against their serial references.

#include <random>

#include <benchmark/benchmark.h>

#include "genfx/batch.hpp"
#include "genfx/rref.hpp"

namespace {

genfx::Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-3, 3);
  genfx::Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
  return m;
}

void BM_RrefParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const genfx::Matrix m = random_matrix(n, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(genfx::rref(m).rank);
}

void BM_RrefSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const genfx::Matrix m = random_matrix(n, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(genfx::rref_serial(m).rank);
}

void BM_BatchParallel(benchmark::State& state) {
  const genfx::BatchBounds bounds{10, 5};
  for (auto _ : state)
    benchmark::DoNotOptimize(genfx::run_batch(7, static_cast<std::size_t>(state.range(0)), bounds).agreements);
}

void BM_BatchSerial(benchmark::State& state) {
  const genfx::BatchBounds bounds{10, 5};
  for (auto _ : state)
    benchmark::DoNotOptimize(genfx::run_batch_serial(7, static_cast<std::size_t>(state.range(0)), bounds).agreements);
}

}  // namespace

BENCHMARK(BM_RrefParallel)->Arg(32)->Arg(64)->Arg(96)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RrefSerial)->Arg(32)->Arg(64)->Arg(96)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchParallel)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchSerial)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

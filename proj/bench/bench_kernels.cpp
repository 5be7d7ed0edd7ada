// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "pfkit/expsum.hpp"
#include "pfkit/measure.hpp"
#include "pfkit/sweep.hpp"

using namespace pfkit;

namespace {

ValueTable random_table(u64 p, std::size_t n) {
  ValueTable t(p, n);
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  for (auto& v : t.entries) v = {g(rng), g(rng)};
  return t;
}

void BM_FourierSeparable(benchmark::State& state) {
  const auto phi = random_table(static_cast<u64>(state.range(0)), 2);
  FourierOptions o;
  o.jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(fourier_table(phi, o));
}

void BM_FourierReference(benchmark::State& state) {
  const auto phi = random_table(static_cast<u64>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(fourier_table_reference(phi));
}

// exp sum of a fixed sextic over every prime up to the limit
u64 weil_kernel(u64 p) {
  const std::vector<u64> f{3 % p, 1, 0, 5 % p, 0, 0, 1};
  const UnitRootTable t(p);
  return static_cast<u64>(std::abs(exp_sum_univariate(f, 1, t)) * 1e6);
}

void BM_WeilSweepParallel(benchmark::State& state) {
  const auto ps = primes_in(static_cast<u64>(state.range(0)));
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(map_primes(std::span<const u64>(ps), jobs, weil_kernel));
}

void BM_WeilSweepSerial(benchmark::State& state) {
  const auto ps = primes_in(static_cast<u64>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(map_primes_serial(std::span<const u64>(ps), weil_kernel));
}

}  // namespace

BENCHMARK(BM_FourierSeparable)->Args({31, 1})->Args({31, 4})->Args({97, 1})->Args({97, 4});
BENCHMARK(BM_FourierReference)->Arg(31)->Arg(97);
BENCHMARK(BM_WeilSweepParallel)->Args({20000, 1})->Args({20000, 4});
BENCHMARK(BM_WeilSweepSerial)->Arg(20000);

BENCHMARK_MAIN();

#include "sidon/components.hpp"
#include "sidon/density.hpp"
#include "sidon/oracle.hpp"
#include "sidon/pair_sidon.hpp"

#include <benchmark/benchmark.h>

namespace {

const sidon::TripleParams k235 = sidon::TripleParams::make(2, 3, 5);

void BM_ConstructExtremalSet(benchmark::State& state) {
  const auto params = sidon::reduce_pair(2, 3);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sidon::construct_extremal_set(params, n));
}
BENCHMARK(BM_ConstructExtremalSet)->Arg(1'000'000);

void BM_FTable(benchmark::State& state) {
  const auto p = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sidon::f_table(k235, p));
}
BENCHMARK(BM_FTable)->Arg(10)->Arg(22)->Arg(40);

void BM_ApproximateDensity(benchmark::State& state) {
  const sidon::Rational eps = sidon::parse_decimal("5e-5");
  for (auto _ : state) benchmark::DoNotOptimize(sidon::approximate_density(k235, eps));
}
BENCHMARK(BM_ApproximateDensity)->Unit(benchmark::kMillisecond);

void BM_EmpiricalDensity(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sidon::empirical_density(k235, n));
}
BENCHMARK(BM_EmpiricalDensity)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

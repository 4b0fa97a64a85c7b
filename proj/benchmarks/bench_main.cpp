#include <benchmark/benchmark.h>

#include "tau/primes.hpp"
#include "tau/series.hpp"
#include "tau/spectral.hpp"

namespace {

void BM_DeltaSeries(benchmark::State& state) {
  const auto limit = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tau::delta_series(limit));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DeltaSeries)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond)
    ->Complexity();

// tau(p^2) sized inputs: roughly 22 * log10(p) digits.
void BM_Bpsw(benchmark::State& state) {
  const tau::BigInt n = tau::pow_ui(10, static_cast<unsigned long>(state.range(0))) + 1;
  for (auto _ : state) benchmark::DoNotOptimize(tau::is_probable_prime(n));
}
BENCHMARK(BM_Bpsw)->Arg(50)->Arg(200)->Arg(800);

void BM_EvenIndexPoly(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tau::even_index_poly(k));
}
BENCHMARK(BM_EvenIndexPoly)->Arg(10)->Arg(100)->Arg(1000);

void BM_RootSet(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tau::root_set(k, tau::default_spectral_digits(k)));
}
BENCHMARK(BM_RootSet)->Arg(10)->Arg(100);

}  // namespace
BENCHMARK_MAIN();

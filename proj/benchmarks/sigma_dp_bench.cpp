#include <benchmark/benchmark.h>

#include "instances.hpp"
#include "kuniv/scc.hpp"
#include "kuniv/sigma_dp.hpp"

namespace {

void BM_SigmaDp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto sigma = static_cast<std::size_t>(state.range(1));
  const kuniv::NormalizedNfa a = kuniv::bench::layered(n, sigma, 5 * n, 5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(kuniv::max_universality_sigma(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SigmaDp)
    ->ArgsProduct({{1000, 4000, 10000}, {3}})
    ->Args({2000, 6})
    ->Args({2000, 10})
    ->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state) {
  const kuniv::NormalizedNfa a = kuniv::bench::layered(static_cast<std::size_t>(state.range(0)), 3,
                                                       5 * static_cast<std::size_t>(state.range(0)), 5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kuniv::decompose(a));
}
BENCHMARK(BM_Decompose)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

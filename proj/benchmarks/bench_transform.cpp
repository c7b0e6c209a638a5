#include <benchmark/benchmark.h>

#include <random>

#include "mflab/transform.hpp"

namespace {

mflab::Signal random_signal(const mflab::TorusGrid& grid) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  mflab::Signal f(grid);
  for (auto& v : f.values) v = {g(rng), g(rng)};
  return f;
}

void BM_ForwardTransform(benchmark::State& state) {
  const mflab::TorusGrid grid(128.0, static_cast<std::size_t>(state.range(0)));
  const auto f = random_signal(grid);
  for (auto _ : state) benchmark::DoNotOptimize(mflab::forward_transform(f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ForwardTransform)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity(benchmark::oNLogN);

void BM_ApplyMultiplier(benchmark::State& state) {
  const mflab::TorusGrid grid(128.0, static_cast<std::size_t>(state.range(0)));
  const auto f = random_signal(grid);
  mflab::SpectralSymbol symbol(grid);
  for (std::int64_t n = -grid.end_index() / 2; n < grid.end_index() / 2; ++n) symbol.at(n) = 1.0;
  for (auto _ : state) benchmark::DoNotOptimize(mflab::apply_multiplier(f, symbol));
}
BENCHMARK(BM_ApplyMultiplier)->RangeMultiplier(4)->Range(1 << 10, 1 << 18);

}  // namespace

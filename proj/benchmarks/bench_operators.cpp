#include <benchmark/benchmark.h>

#include <random>

#include "mflab/lab/families.hpp"
#include "mflab/operators.hpp"

namespace {

void BM_VqDk(benchmark::State& state) {
  const mflab::TorusGrid grid(128.0, std::size_t{1} << 15);
  mflab::lab::Rng rng(4);
  const auto sigma = mflab::lab::random_separated_set(grid, static_cast<std::size_t>(state.range(0)), rng);
  const auto f = mflab::lab::narrow_atom(grid, sigma.indices(), rng).f;
  const auto range = mflab::ScaleRange::defaults(grid);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mflab::vq_dk(f, sigma, 3.0, range, mflab::VariationMode::nonhomogeneous));
  }
}
BENCHMARK(BM_VqDk)->RangeMultiplier(4)->Range(2, 128)->Unit(benchmark::kMillisecond);

void BM_RoughT(benchmark::State& state) {
  const mflab::TorusGrid grid(128.0, std::size_t{1} << 15);
  mflab::lab::Rng rng(5);
  const auto spec = mflab::lab::random_rough_spec(grid, static_cast<std::size_t>(state.range(0)), rng, false);
  const auto f = mflab::lab::delta_input(grid, rng).f;
  for (auto _ : state) benchmark::DoNotOptimize(mflab::rough_T(f, spec));
}
BENCHMARK(BM_RoughT)->RangeMultiplier(4)->Range(4, 256)->Unit(benchmark::kMillisecond);

}  // namespace

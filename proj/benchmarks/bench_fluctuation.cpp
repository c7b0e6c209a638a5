#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "mflab/entropy.hpp"
#include "mflab/min_ball.hpp"
#include "mflab/variation.hpp"

namespace {

std::vector<mflab::cplx> random_values(std::size_t n) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  std::vector<mflab::cplx> c(n);
  for (auto& v : c) v = {g(rng), g(rng)};
  return c;
}

void BM_VariationDP(benchmark::State& state) {
  const auto c = random_values(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mflab::variation_norm(c, 3.0, mflab::VariationMode::nonhomogeneous));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_VariationDP)->RangeMultiplier(2)->Range(8, 512)->Complexity(benchmark::oNSquared);

void BM_MinBallExact(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(state.range(0)), std::vector<double>(3));
  for (auto& row : rows) {
    for (auto& x : row) x = g(rng);
  }
  const auto seq = mflab::VectorSequence::real_points(rows);
  for (auto _ : state) benchmark::DoNotOptimize(mflab::min_enclosing_ball(seq, mflab::BallMethod::exact));
}
BENCHMARK(BM_MinBallExact)->RangeMultiplier(4)->Range(16, 4096);

void BM_MinBallIterative(benchmark::State& state) {
  const auto seq = mflab::VectorSequence(4, random_values(4 * static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(mflab::min_enclosing_ball(seq, mflab::BallMethod::iterative));
}
BENCHMARK(BM_MinBallIterative)->RangeMultiplier(4)->Range(16, 1024);

void BM_GreedyEntropyProfile(benchmark::State& state) {
  const auto seq = mflab::VectorSequence::scalars(random_values(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(mflab::greedy_entropy_profile(seq));
}
BENCHMARK(BM_GreedyEntropyProfile)->RangeMultiplier(4)->Range(16, 1024);

}  // namespace

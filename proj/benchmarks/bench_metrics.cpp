#include <benchmark/benchmark.h>

#include <random>

#include "slr/modelselect.hpp"
#include "slr/scimap.hpp"

namespace {

slr::Matrix stochastic(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  slr::Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    double total = 0;
    for (std::size_t c = 0; c < cols; ++c) total += m(r, c) = u(rng);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) /= total;
  }
  return m;
}

// range(0) topics over a 2000-term vocabulary
void BM_Cao(benchmark::State& state) {
  const auto phi = stochastic(static_cast<std::size_t>(state.range(0)), 2000, 1);
  for (auto _ : state) benchmark::DoNotOptimize(slr::modelselect::metric_cao(phi));
}
BENCHMARK(BM_Cao)->Arg(10)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_Deveaud(benchmark::State& state) {
  const auto phi = stochastic(static_cast<std::size_t>(state.range(0)), 2000, 2);
  for (auto _ : state) benchmark::DoNotOptimize(slr::modelselect::metric_deveaud(phi));
}
BENCHMARK(BM_Deveaud)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Arun(benchmark::State& state) {
  const auto K = static_cast<std::size_t>(state.range(0));
  const auto phi = stochastic(K, 2000, 3);
  const auto theta = stochastic(2000, K, 4);
  const std::vector<std::uint32_t> lengths(2000, 80);
  for (auto _ : state) benchmark::DoNotOptimize(slr::modelselect::metric_arun(phi, theta, lengths));
}
BENCHMARK(BM_Arun)->Arg(10)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_IntertopicCoords(benchmark::State& state) {
  const auto phi = stochastic(static_cast<std::size_t>(state.range(0)), 2000, 5);
  for (auto _ : state) benchmark::DoNotOptimize(slr::scimap::intertopic_coords(phi));
}
BENCHMARK(BM_IntertopicCoords)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_TopicCorrelation(benchmark::State& state) {
  const auto theta = stochastic(2300, static_cast<std::size_t>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(slr::scimap::topic_correlation(theta));
}
BENCHMARK(BM_TopicCorrelation)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

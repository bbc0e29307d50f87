#include <benchmark/benchmark.h>

#include "slr/dtm.hpp"
#include "slr/lda.hpp"
#include "slr/synthetic.hpp"

namespace {

slr::dtm::DocTermMatrix planted(int docs, int topics) {
  slr::synthetic::PlantedOptions o;
  o.docs = docs;
  o.topics = topics;
  o.support_size = 20;
  o.mean_length = 100;
  o.purity = 0.8;
  const auto p = slr::synthetic::make_planted_corpus(o);
  return slr::dtm::build_matrix(p.docs, slr::dtm::build_vocabulary(p.docs, 1));
}

// One sweep over ~100 tokens per document; range(0) docs, range(1) topics.
void BM_GibbsSweep(benchmark::State& state) {
  const auto m = planted(static_cast<int>(state.range(0)), 10);
  slr::lda::LdaConfig cfg;
  cfg.num_topics = static_cast<int>(state.range(1));
  auto s = slr::lda::gibbs_init(m, cfg, 7413);
  for (auto _ : state) slr::lda::gibbs_sweep(s, cfg);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m.total_tokens()));
}
BENCHMARK(BM_GibbsSweep)->Args({200, 5})->Args({200, 50})->Args({1000, 10})->Args({1000, 100})->Unit(benchmark::kMillisecond);

void BM_LogLikelihood(benchmark::State& state) {
  const auto m = planted(1000, 10);
  slr::lda::LdaConfig cfg;
  cfg.num_topics = static_cast<int>(state.range(0));
  const auto s = slr::lda::gibbs_init(m, cfg, 32);
  for (auto _ : state) benchmark::DoNotOptimize(slr::lda::corpus_log_likelihood(s, cfg.beta));
}
BENCHMARK(BM_LogLikelihood)->Arg(10)->Arg(100);

void BM_RunChainShort(benchmark::State& state) {
  const auto m = planted(200, 5);
  slr::lda::LdaConfig cfg;
  cfg.num_topics = 5;
  cfg.iterations = 100;
  cfg.thin = 10;
  for (auto _ : state) benchmark::DoNotOptimize(slr::lda::run_chain(m, cfg, 279));
}
BENCHMARK(BM_RunChainShort)->Unit(benchmark::kMillisecond);

}  // namespace

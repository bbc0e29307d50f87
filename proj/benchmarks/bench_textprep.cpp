#include <benchmark/benchmark.h>

#include "slr/stemmer.hpp"
#include "slr/synthetic.hpp"
#include "slr/textprep.hpp"

namespace {

const std::vector<std::string> kWords{"automation", "generalizations", "relational", "hopefulness",
                                      "running",    "caresses",        "effectively", "organizational",
                                      "skies",      "international",   "processing",  "conditional"};

void BM_Stem(benchmark::State& state) {
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(slr::textprep::stem(kWords[i++ % kWords.size()]));
}
BENCHMARK(BM_Stem);

void BM_PreprocessAbstract(benchmark::State& state) {
  slr::synthetic::PlantedOptions o;
  o.docs = 50;
  const auto fixture = slr::synthetic::make_bib_fixture(o, 0);
  const auto corpus = slr::corpus::parse_bib_csv_text(fixture.csv);
  const auto& standard = slr::textprep::builtin_standard_stopwords();
  const auto& custom = slr::textprep::builtin_custom_stopwords();
  for (auto _ : state) benchmark::DoNotOptimize(slr::textprep::preprocess_corpus(corpus, standard, custom));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.documents.size()));
}
BENCHMARK(BM_PreprocessAbstract)->Unit(benchmark::kMillisecond);

}  // namespace

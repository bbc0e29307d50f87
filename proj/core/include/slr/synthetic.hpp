#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slr/corpus.hpp"
#include "slr/textprep.hpp"

// Planted-topic corpora for tests, benchmarks and the bundled fixture.
namespace slr::synthetic {

struct PlantedOptions {
  int topics = 5;
  int support_size = 6;
  int docs = 200;
  int mean_length = 50;
  int length_jitter = 5;  // lengths uniform in mean +- jitter
  // Probability that a token comes from the document's own topic; otherwise
  // the topic is drawn uniformly from all topics.
  double purity = 1.0;
  // Relative topic frequencies; empty cycles through topics (d mod topics).
  std::vector<double> topic_weights;
  std::uint64_t seed = 1;
};

struct PlantedCorpus {
  std::vector<textprep::TokenizedDoc> docs;
  std::vector<std::vector<std::string>> supports;  // terms of each planted topic
  std::vector<int> doc_topic;                      // planted topic of each document
};

/// Terms are "t<topic>w<j>"
/// unless `vocabulary` supplies topics * support_size words.
PlantedCorpus make_planted_corpus(const PlantedOptions& options,
                                  const std::vector<std::string>& vocabulary = {});

/// 30 ordinary English words, six per planted theme, that survive both shipped
/// stopword lists and stem to distinct terms.
const std::vector<std::string>& fixture_words();

struct BibFixture {
  std::string csv;       // Scopus-style export
  std::string area_map;  // source,area_code
  PlantedCorpus planted;
};

/// Bibliographic export around a planted corpus built from the first
/// topics * support_size fixture_words(): one row per planted document plus `blank_abstracts` rows without abstract.
/// Abstracts carry stopwords, numerals and punctuation that preprocessing removes.
BibFixture make_bib_fixture(const PlantedOptions& options, int blank_abstracts = 4);

}  // namespace slr::synthetic

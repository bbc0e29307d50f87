#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slr/dtm.hpp"
#include "slr/modelselect.hpp"
#include "slr/scimap.hpp"

// CSV exports of stage results.
namespace slr::report {

/// k, <metric>_raw x4, <metric>_norm x4, composite, chosen.
std::string selection_csv(const modelselect::MetricSeries& s);

/// One row per topic: id, papers, citations, cpp, growth, cell, significance, top terms.
std::string profiles_csv(const scimap::ScienceMap& m);

/// Long format: topic, year, papers, citations.
std::string evolution_csv(std::span<const scimap::EvolutionRow> rows);
std::vector<scimap::EvolutionRow> parse_evolution_csv(std::string_view text);

/// Upper triangle of the correlation matrix: topic_a, topic_b, r.
std::string correlation_csv(const scimap::ScienceMap& m);

std::string salient_csv(const scimap::ScienceMap& m);

/// doc, term, count for every non-zero cell.
std::string dtm_triplets_csv(const dtm::DocTermMatrix& m);

}  // namespace slr::report

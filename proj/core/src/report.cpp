#include "slr/report.hpp"

#include <algorithm>
#include <charconv>

#include "slr/artifact.hpp"
#include "slr/csv.hpp"
#include "slr/error.hpp"

namespace slr::report {

namespace {

void line(std::string& out, const csv::Row& row) {
  out += csv::format_row(row);
  out += '\n';
}

std::string num(double x) {
  const auto s = artifact::format_double(x);
  return s == "null" ? "NA" : s;
}

template <typename Int>
Int parse_int(const std::string& s) {
  Int v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::MalformedCsv, "expected an integer, got '" + s + "'");
  }
  return v;
}

}  // namespace

std::string selection_csv(const modelselect::MetricSeries& s) {
  std::string out;
  csv::Row header{"k"};
  for (auto c : modelselect::kMetricColumns) header.push_back(std::string(c) + "_raw");
  for (auto c : modelselect::kMetricColumns) header.push_back(std::string(c) + "_norm");
  header.insert(header.end(), {"composite", "chosen"});
  line(out, header);
  for (std::size_t i = 0; i < s.candidates.size(); ++i) {
    csv::Row row{std::to_string(s.candidates[i])};
    for (std::size_t m = 0; m < modelselect::kNumMetrics; ++m) row.push_back(num(s.raw[m][i]));
    for (std::size_t m = 0; m < modelselect::kNumMetrics; ++m) row.push_back(num(s.normalized[m][i]));
    row.push_back(i < s.composite.size() ? num(s.composite[i]) : "NA");
    row.push_back(s.candidates[i] == s.chosen_k ? "1" : "0");
    line(out, row);
  }
  return out;
}

std::string profiles_csv(const scimap::ScienceMap& m) {
  std::string out;
  line(out, {"topic", "papers", "citations", "cpp", "growth_pct", "grid_cell", "significant",
             "top_terms"});
  for (const auto& p : m.profiles) {
    std::string terms;
    for (const auto& [t, w] : p.top_terms) {
      if (!terms.empty()) terms += ' ';
      terms += t;
    }
    const bool sig =
        std::find(m.significant.begin(), m.significant.end(), p.topic_id) != m.significant.end();
    line(out, {std::to_string(p.topic_id), std::to_string(p.paper_count),
               std::to_string(p.citation_sum), num(p.cpp), num(p.growth_pct),
               std::string(1, p.grid_cell), sig ? "1" : "0", terms});
  }
  return out;
}

std::string evolution_csv(std::span<const scimap::EvolutionRow> rows) {
  std::string out;
  line(out, {"topic", "year", "papers", "citations"});
  for (const auto& r : rows) {
    line(out, {std::to_string(r.topic_id), std::to_string(r.year), std::to_string(r.papers),
               std::to_string(r.citations)});
  }
  return out;
}

std::vector<scimap::EvolutionRow> parse_evolution_csv(std::string_view text) {
  const auto rows = csv::parse(text);
  if (rows.empty() || rows[0] != csv::Row{"topic", "year", "papers", "citations"}) {
    throw Error(ErrorKind::MissingColumn, "evolution table needs topic,year,papers,citations");
  }
  std::vector<scimap::EvolutionRow> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.size() != 4) throw Error(ErrorKind::MalformedCsv, "evolution row must have 4 fields");
    out.push_back({parse_int<int>(r[0]), parse_int<int>(r[1]), parse_int<std::int64_t>(r[2]),
                   parse_int<std::int64_t>(r[3])});
  }
  return out;
}

std::string correlation_csv(const scimap::ScienceMap& m) {
  std::string out;
  line(out, {"topic_a", "topic_b", "r"});
  const std::size_t K = m.correlation.rows();
  for (std::size_t i = 0; i < K; ++i) {
    for (std::size_t j = i + 1; j < K; ++j) {
      line(out, {std::to_string(i + 1), std::to_string(j + 1), num(m.correlation(i, j))});
    }
  }
  return out;
}

std::string salient_csv(const scimap::ScienceMap& m) {
  std::string out;
  line(out, {"term", "frequency"});
  for (const auto& [t, f] : m.salient) line(out, {t, std::to_string(f)});
  return out;
}

std::string dtm_triplets_csv(const dtm::DocTermMatrix& m) {
  std::string out;
  line(out, {"doc", "term", "count"});
  for (std::size_t d = 0; d < m.num_docs(); ++d) {
    for (const auto& e : m.rows[d]) {
      line(out, {m.doc_ids[d], m.vocabulary[e.term], std::to_string(e.count)});
    }
  }
  return out;
}

}  // namespace slr::report

#include "slr/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <unordered_map>

#include "slr/csv.hpp"
#include "slr/error.hpp"
#include "slr/fileio.hpp"
#include "slr/text.hpp"

namespace slr::corpus {

namespace {

std::size_t column_index(const csv::Row& header, const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (text::trim(header[i]) == name) return i;
  }
  throw Error(ErrorKind::MissingColumn, "column \"" + name + "\" not found in header");
}

template <typename Int>
std::optional<Int> parse_int(std::string_view s) {
  s = text::trim(s);
  if (s.empty()) return std::nullopt;
  Int value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

std::string make_document_id(std::size_t row_index, std::string_view title,
                             std::optional<int> year) {
  std::string key(title);
  key.push_back('\x1f');
  if (year) key += std::to_string(*year);
  char prefix[32];
  std::snprintf(prefix, sizeof prefix, "r%06zu-", row_index);
  return prefix + text::sha256_hex(key).substr(0, 12);
}

Corpus parse_bib_csv_text(std::string_view bytes, const IngestOptions& options,
                          std::string_view input_name) {
  Corpus corpus;
  corpus.provenance.input_file = std::string(input_name);
  corpus.provenance.input_sha256 = text::sha256_hex(bytes);
  corpus.provenance.ingested_at = options.ingested_at;

  const auto rows = csv::parse(bytes);
  if (rows.empty()) throw Error(ErrorKind::MalformedCsv, "missing header row");
  const auto& header = rows.front();
  const auto& cols = options.columns;
  const std::size_t i_title = column_index(header, cols.title);
  const std::size_t i_abstract = column_index(header, cols.abstract);
  const std::size_t i_year = column_index(header, cols.year);
  const std::size_t i_cites = column_index(header, cols.citations);
  const std::size_t i_source = column_index(header, cols.source);

  auto& warnings = corpus.provenance.warnings;
  std::int64_t missing_year = 0;
  std::int64_t missing_citations = 0;
  corpus.documents.reserve(rows.size() - 1);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != header.size()) {
      throw Error(ErrorKind::MalformedCsv, "data row " + std::to_string(r) + " has " +
                                               std::to_string(row.size()) + " fields, header has " +
                                               std::to_string(header.size()));
    }
    Document d;
    d.title = row[i_title];
    d.abstract = row[i_abstract];
    d.source = row[i_source];

    const auto year = parse_int<int>(row[i_year]);
    if (!year) {
      ++missing_year;
      warnings.push_back("row " + std::to_string(r) + ": year \"" + row[i_year] +
                         "\" unparseable; excluded from yearly series");
    } else if (*year < options.min_year || *year > options.max_year) {
      ++missing_year;
      warnings.push_back("row " + std::to_string(r) + ": year " + std::to_string(*year) +
                         " outside [" + std::to_string(options.min_year) + ", " +
                         std::to_string(options.max_year) + "]; excluded from yearly series");
    } else {
      d.year = year;
    }

    const auto cites = parse_int<std::int64_t>(row[i_cites]);
    if (!cites || *cites < 0) {
      ++missing_citations;
      warnings.push_back("row " + std::to_string(r) + ": citations \"" + row[i_cites] +
                         "\" unparseable; set to 0");
    } else {
      d.citations = *cites;
    }

    d.id = make_document_id(r - 1, d.title, d.year);
    corpus.documents.push_back(std::move(d));
  }
  corpus.provenance.counts["rows"] = static_cast<std::int64_t>(corpus.documents.size());
  corpus.provenance.counts["year_missing"] = missing_year;
  corpus.provenance.counts["citations_defaulted"] = missing_citations;
  return corpus;
}

Corpus parse_bib_csv(const std::filesystem::path& path, const IngestOptions& options) {
  return parse_bib_csv_text(read_file(path), options, path.filename().string());
}

Corpus drop_missing_abstracts(Corpus c) {
  const auto before = static_cast<std::int64_t>(c.documents.size());
  std::erase_if(c.documents, [](const Document& d) {
    return text::collapse_whitespace(d.abstract).empty();
  });
  const auto after = static_cast<std::int64_t>(c.documents.size());
  c.provenance.counts["abstract_filter_before"] = before;
  c.provenance.counts["abstract_filter_after"] = after;
  return c;
}

std::string normalize_source(std::string_view source) {
  return text::collapse_whitespace(text::fold_case(source));
}

AreaMapping parse_area_mapping_text(std::string_view bytes) {
  const auto rows = csv::parse(bytes);
  AreaMapping m;
  if (rows.empty()) return m;
  const std::size_t i_source = column_index(rows.front(), "source");
  const std::size_t i_area = column_index(rows.front(), "area_code");
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != rows.front().size()) {
      throw Error(ErrorKind::MalformedCsv, "area mapping row " + std::to_string(r) +
                                               " has wrong field count");
    }
    const auto area = std::string(text::trim(row[i_area]));
    if (area.empty()) continue;
    m.entries[normalize_source(row[i_source])].insert(area);
  }
  return m;
}

AreaMapping load_area_mapping(const std::filesystem::path& path) {
  return parse_area_mapping_text(read_file(path));
}

Corpus merge_subject_areas(Corpus c, const AreaMapping& m) {
  std::int64_t unmatched = 0;
  for (auto& d : c.documents) {
    auto it = m.entries.find(normalize_source(d.source));
    if (it == m.entries.end()) {
      d.subject_areas.clear();
      ++unmatched;
    } else {
      d.subject_areas = it->second;
    }
  }
  c.provenance.counts["area_unmatched"] = unmatched;
  if (unmatched > 0) {
    c.provenance.warnings.push_back(std::to_string(unmatched) +
                                    " documents have a source absent from the area mapping");
  }
  return c;
}

std::map<int, Tally> yearly_series(const Corpus& c) {
  std::map<int, Tally> out;
  for (const auto& d : c.documents) {
    if (!d.year) continue;
    auto& t = out[*d.year];
    ++t.papers;
    t.citations += d.citations;
  }
  return out;
}

std::vector<std::pair<std::string, Tally>> subject_area_tally(const Corpus& c) {
  std::map<std::string, Tally> by_area;
  for (const auto& d : c.documents) {
    for (const auto& area : d.subject_areas) {
      auto& t = by_area[area];
      ++t.papers;
      t.citations += d.citations;
    }
  }
  std::vector<std::pair<std::string, Tally>> out(by_area.begin(), by_area.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.second.papers > b.second.papers; });
  return out;
}

}  // namespace slr::corpus

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace slr::corpus {

struct Document {
  std::string id;
  std::string title;
  std::string abstract;
  std::optional<int> year;  // nullopt: missing, unparseable or out of range
  std::int64_t citations = 0;
  std::string source;
  std::set<std::string> subject_areas;

  bool operator==(const Document&) const = default;
};

struct Provenance {
  std::string input_file;
  std::string input_sha256;
  std::string ingested_at;
  std::map<std::string, std::int64_t> counts;
  std::vector<std::string> warnings;

  bool operator==(const Provenance&) const = default;
};

struct Corpus {
  std::vector<Document> documents;
  Provenance provenance;

  bool operator==(const Corpus&) const = default;
};

/// Header names of the bibliographic export. Defaults follow the Scopus CSV export.
struct ColumnMap {
  std::string title = "Title";
  std::string abstract = "Abstract";
  std::string year = "Year";
  std::string citations = "Cited by";
  std::string source = "Source title";
};

struct IngestOptions {
  ColumnMap columns;
  int min_year = 1990;
  int max_year = 2035;
  std::string ingested_at;
};

/// Normalized source name -> area codes.
struct AreaMapping {
  std::map<std::string, std::set<std::string>> entries;
};

struct Tally {
  std::int64_t papers = 0;
  std::int64_t citations = 0;

  bool operator==(const Tally&) const = default;
};

/// Parses CSV bytes. `input_name` is recorded in provenance only.
Corpus parse_bib_csv_text(std::string_view bytes, const IngestOptions& options = {},
                          std::string_view input_name = "<memory>");

/// Reads and parses `path`; throws Error(IoError) when unreadable.
Corpus parse_bib_csv(const std::filesystem::path& path, const IngestOptions& options = {});

/// Keeps documents whose abstract is non-blank; records before/after counts.
Corpus drop_missing_abstracts(Corpus c);

/// Case-folds and collapses whitespace; the lookup key for AreaMapping.
std::string normalize_source(std::string_view source);

/// Expects a header with columns `source` and `area_code`, one row per pair.
AreaMapping parse_area_mapping_text(std::string_view bytes);
AreaMapping load_area_mapping(const std::filesystem::path& path);

Corpus merge_subject_areas(Corpus c, const AreaMapping& m);

/// Per-year tallies over documents with a valid year.
std::map<int, Tally> yearly_series(const Corpus& c);

/// Each document counts once per area it carries. Sorted by paper count
/// descending, then area code ascending.
std::vector<std::pair<std::string, Tally>> subject_area_tally(const Corpus& c);

/// Stable id: zero-padded row index plus a short hash of (title, year).
std::string make_document_id(std::size_t row_index, std::string_view title,
                             std::optional<int> year);

}  // namespace slr::corpus

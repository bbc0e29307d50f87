#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "slr/corpus.hpp"
#include "slr/dtm.hpp"
#include "slr/lda.hpp"
#include "slr/modelselect.hpp"
#include "slr/scimap.hpp"

// JSON stage files. Writers are canonical: keys in a fixed order, floats with
// 17 significant digits, non-finite floats as null, so identical values give
// identical bytes. Readers throw Error(SchemaMismatch) on a wrong "schema"
// field or malformed structure.
namespace slr::artifact {

inline constexpr std::string_view kCorpusSchema = "slr.corpus/1";
inline constexpr std::string_view kDtmSchema = "slr.dtm/1";
inline constexpr std::string_view kModelSchema = "slr.model/1";
inline constexpr std::string_view kChainSchema = "slr.chain/1";
inline constexpr std::string_view kSelectionSchema = "slr.selection/1";
inline constexpr std::string_view kMapSchema = "slr.sciencemap/1";

/// printf "%.17g"; "null" for NaN and infinities.
std::string format_double(double x);

/// Schema tag of any artifact, or "" if the text is not a JSON object with one.
std::string peek_schema(std::string_view text);

/// Reference from one artifact to the file it was derived from.
struct Ref {
  std::string artifact;
  std::string sha256;

  bool operator==(const Ref&) const = default;
};

std::string corpus_to_json(const corpus::Corpus& c);
corpus::Corpus corpus_from_json(std::string_view text);

struct DtmArtifact {
  dtm::DocTermMatrix matrix;
  int min_count = 1;
  std::vector<std::string> empty_after_preprocessing;
  Ref corpus;
  Ref standard_stopwords;
  Ref custom_stopwords;

  bool operator==(const DtmArtifact&) const = default;
};

std::string dtm_to_json(const DtmArtifact& a);
DtmArtifact dtm_from_json(std::string_view text);

/// Single chain, used by the select-k resume cache.
std::string chain_to_json(const lda::LdaModel& m);
lda::LdaModel chain_from_json(std::string_view text);

struct ModelArtifact {
  lda::LdaModel model;
  std::size_t best_index = 0;
  std::vector<lda::RunSummary> runs;
  Ref vocabulary_ref;  // the dtm artifact; vocabulary aligns with phi columns
  Ref doc_ids_ref;     // the dtm artifact; doc_ids align with theta rows
};

std::string model_to_json(const ModelArtifact& a);
ModelArtifact model_from_json(std::string_view text);

struct SelectionArtifact {
  modelselect::MetricSeries series;
  lda::LdaConfig config;  // num_topics is not meaningful here
  modelselect::SelectionOptions options;
  std::vector<lda::RunSummary> runs;
  std::vector<int> run_k;
  Ref dtm;
};

std::string selection_to_json(const SelectionArtifact& a);
SelectionArtifact selection_from_json(std::string_view text);

struct MapArtifact {
  scimap::ScienceMap map;
  Ref model;
  Ref corpus;
};

std::string map_to_json(const MapArtifact& a);
MapArtifact map_from_json(std::string_view text);

}  // namespace slr::artifact

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slr/corpus.hpp"
#include "slr/error.hpp"
#include "slr/lda.hpp"
#include "slr/modelselect.hpp"
#include "slr/scimap.hpp"

// File-based pipeline stages shared by the slr tool and its tests. Each stage
// reads the previous stage's artifact from out_dir, writes one artifact and
// records itself in out_dir/manifest.json.
namespace slr::pipeline {

namespace fs = std::filesystem;

inline constexpr std::string_view kManifestSchema = "slr.manifest/1";

inline constexpr const char* kCorpusFile = "corpus.json";
inline constexpr const char* kDtmFile = "dtm.json";
inline constexpr const char* kSelectionFile = "selection.json";
inline constexpr const char* kModelFile = "model.json";
inline constexpr const char* kMapFile = "sciencemap.json";
inline constexpr const char* kReportDir = "report";
inline constexpr const char* kChainDir = "chains";

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitBadConfig = 2,
  kExitArtifact = 3,
  kExitNumerical = 4,
};

int exit_code(ErrorKind kind);

/// "10:300:10" (first:last:step) or "2,3,5". Must be positive and strictly ascending.
std::vector<int> parse_grid(std::string_view grid_text);

struct RunConfig {
  fs::path out_dir = "slr_out";
  int jobs = 1;

  // ingest
  fs::path input;
  fs::path area_map;  // optional
  corpus::ColumnMap columns;
  int min_year = 1990;
  int max_year = 2035;

  // prep; empty paths select the bundled lists
  fs::path standard_stopwords;
  fs::path custom_stopwords;
  int min_count = 1;

  // select-k / fit
  std::string grid = "10:300:10";
  int k = 0;  // fit: 0 takes chosen_k from selection.json
  std::optional<double> alpha;
  double beta = 0.1;
  int iterations = 2000;
  int thin = 200;
  int runs = 5;
  std::vector<std::uint64_t> seeds{7413, 32, 23935, 8461, 279};
  std::string posterior = "mean";       // mean | last
  std::string arun = "symmetric";       // symmetric | asymmetric
  std::string griffiths = "best_run";   // best_run | all_runs
  bool resume = true;

  // map
  int reference_year = 2019;
  int growth_horizon = 4;
  int quantile_type = 7;
  int top_terms = 5;
  int salient_terms = 30;
  std::string aggregation = "hard";  // hard | fractional

  // report
  bool json = true;
  bool csv = true;
  bool svg = true;

  lda::LdaConfig lda_config() const;
  modelselect::SelectionOptions selection_options() const;
  scimap::MapOptions map_options() const;
};

struct StageResult {
  fs::path artifact;
  std::vector<fs::path> outputs;  // every file written, artifact first
  std::string summary;            // human-readable, printed by the tool
};

using Progress = std::function<void(std::size_t done, std::size_t total)>;

StageResult cmd_ingest(const RunConfig& cfg);
StageResult cmd_prep(const RunConfig& cfg);
StageResult cmd_select_k(const RunConfig& cfg, const Progress& progress = {});
StageResult cmd_fit(const RunConfig& cfg);
StageResult cmd_map(const RunConfig& cfg);
StageResult cmd_report(const RunConfig& cfg);

/// ISO-8601 UTC time from SOURCE_DATE_EPOCH when set, else the current time.
std::string timestamp();

}  // namespace slr::pipeline

#include "pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <map>
#include <sstream>

#include "json.hpp"
#include "slr/artifact.hpp"
#include "slr/dtm.hpp"
#include "slr/fileio.hpp"
#include "slr/report.hpp"
#include "slr/svg.hpp"
#include "slr/text.hpp"
#include "slr/textprep.hpp"

namespace slr::pipeline {

using Json = nlohmann::ordered_json;
using Settings = std::vector<std::pair<std::string, std::string>>;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadConfig:
    case ErrorKind::MissingColumn:
    case ErrorKind::MalformedCsv:
    case ErrorKind::EmptyVocabulary:
      return kExitBadConfig;
    case ErrorKind::SchemaMismatch:
    case ErrorKind::MissingArtifact:
      return kExitArtifact;
    case ErrorKind::NumericalError:
    case ErrorKind::SvdFailure:
    case ErrorKind::DomainError:
      return kExitNumerical;
    case ErrorKind::IoError:
      return kExitFailure;
  }
  return kExitFailure;
}

namespace {

int to_int(std::string_view s, std::string_view what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::BadConfig, "bad " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (auto x : v) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

}  // namespace

std::vector<int> parse_grid(std::string_view grid_text) {
  std::vector<int> grid;
  if (grid_text.find(':') != std::string_view::npos) {
    std::vector<int> parts;
    std::size_t start = 0;
    while (true) {
      const auto colon = grid_text.find(':', start);
      parts.push_back(to_int(grid_text.substr(start, colon - start), "k-grid"));
      if (colon == std::string_view::npos) break;
      start = colon + 1;
    }
    if (parts.size() != 3 || parts[2] < 1 || parts[1] < parts[0]) {
      throw Error(ErrorKind::BadConfig, "k-grid range must be first:last:step with step >= 1");
    }
    for (int k = parts[0]; k <= parts[1]; k += parts[2]) grid.push_back(k);
  } else {
    std::size_t start = 0;
    while (start <= grid_text.size()) {
      const auto comma = grid_text.find(',', start);
      grid.push_back(to_int(grid_text.substr(start, comma - start), "k-grid"));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 1 || (i > 0 && grid[i] <= grid[i - 1])) {
      throw Error(ErrorKind::BadConfig, "k-grid must be positive and strictly ascending");
    }
  }
  if (grid.empty()) throw Error(ErrorKind::BadConfig, "k-grid is empty");
  return grid;
}

lda::LdaConfig RunConfig::lda_config() const {
  lda::LdaConfig c;
  c.num_topics = k;
  c.alpha = alpha;
  c.beta = beta;
  c.iterations = iterations;
  c.thin = thin;
  c.runs = runs;
  c.seeds = seeds;
  if (posterior != "mean" && posterior != "last") {
    throw Error(ErrorKind::BadConfig, "posterior must be mean or last");
  }
  c.posterior = posterior == "mean" ? lda::Posterior::Mean : lda::Posterior::Last;
  return c;
}

modelselect::SelectionOptions RunConfig::selection_options() const {
  modelselect::SelectionOptions o;
  if (arun != "symmetric" && arun != "asymmetric") {
    throw Error(ErrorKind::BadConfig, "arun must be symmetric or asymmetric");
  }
  if (griffiths != "best_run" && griffiths != "all_runs") {
    throw Error(ErrorKind::BadConfig, "griffiths must be best_run or all_runs");
  }
  o.arun = arun == "symmetric" ? modelselect::ArunVariant::Symmetric : modelselect::ArunVariant::Asymmetric;
  o.griffiths = griffiths == "best_run" ? modelselect::GriffithsSamples::BestRun
                                        : modelselect::GriffithsSamples::AllRuns;
  o.jobs = jobs;
  return o;
}

scimap::MapOptions RunConfig::map_options() const {
  if (aggregation != "hard" && aggregation != "fractional") {
    throw Error(ErrorKind::BadConfig, "aggregation must be hard or fractional");
  }
  if (quantile_type < 1 || quantile_type > 9) throw Error(ErrorKind::BadConfig, "quantile type must be 1..9");
  if (top_terms < 1 || salient_terms < 1) throw Error(ErrorKind::BadConfig, "term counts must be >= 1");
  if (growth_horizon < 1) throw Error(ErrorKind::BadConfig, "growth horizon must be >= 1");
  scimap::MapOptions o;
  o.reference_year = reference_year;
  o.growth_horizon = growth_horizon;
  o.quantile_type = quantile_type;
  o.top_terms = static_cast<std::size_t>(top_terms);
  o.salient_terms = static_cast<std::size_t>(salient_terms);
  o.aggregation = aggregation == "hard" ? scimap::Aggregation::Hard : scimap::Aggregation::Fractional;
  return o;
}

std::string timestamp() {
  std::time_t t = std::time(nullptr);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch && *epoch) {
    long long v = 0;
    const std::string_view s(epoch);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) {
      throw Error(ErrorKind::BadConfig, "SOURCE_DATE_EPOCH must be a non-negative integer");
    }
    t = static_cast<std::time_t>(v);
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

struct Loaded {
  std::string bytes;
  std::string sha256;
};

Loaded load_artifact(const fs::path& path, std::string_view stage_hint) {
  if (!fs::exists(path)) {
    throw Error(ErrorKind::MissingArtifact,
                path.string() + " not found; run '" + std::string(stage_hint) + "' first");
  }
  Loaded l{read_file(path), {}};
  l.sha256 = text::sha256_hex(l.bytes);
  return l;
}

std::string display_path(const fs::path& p, const fs::path& out_dir) {
  const auto rel = p.lexically_normal().lexically_relative(out_dir.lexically_normal());
  if (!rel.empty() && *rel.begin() != "..") return rel.generic_string();
  return p.generic_string();
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::IoError, "cannot create " + dir.string() + ": " + ec.message());
}

struct ManifestInput {
  fs::path path;
  std::string sha256;
};

// Replaces the stage's previous entry so reruns keep the manifest stable.
void record(const RunConfig& cfg, std::string_view stage, const Settings& settings,
            const std::vector<ManifestInput>& inputs, const std::vector<fs::path>& outputs) {
  const fs::path path = cfg.out_dir / "manifest.json";
  Json manifest;
  if (fs::exists(path)) {
    const auto bytes = read_file(path);
    manifest = Json::parse(bytes, nullptr, false);
    if (manifest.is_discarded() || !manifest.is_object() ||
        manifest.value("schema", "") != kManifestSchema) {
      throw Error(ErrorKind::SchemaMismatch, path.string() + " is not a run manifest");
    }
  } else {
    manifest["schema"] = kManifestSchema;
    manifest["entries"] = Json::array();
  }

  Json entry;
  entry["stage"] = stage;
  std::string command = "slr " + std::string(stage);
  Json config = Json::object();
  for (const auto& [k, v] : settings) {
    config[k] = v;
    command += " --" + k + " '" + v + "'";
  }
  entry["command"] = command;
  entry["config"] = std::move(config);
  Json in = Json::array();
  for (const auto& i : inputs) {
    in.push_back(Json{{"path", display_path(i.path, cfg.out_dir)}, {"sha256", i.sha256}});
  }
  entry["inputs"] = std::move(in);
  Json out = Json::array();
  for (const auto& o : outputs) {
    out.push_back(Json{{"path", display_path(o, cfg.out_dir)},
                       {"sha256", text::sha256_hex(read_file(o))}});
  }
  entry["outputs"] = std::move(out);
  entry["tool_version"] = SLR_VERSION;
  entry["created_at"] = timestamp();

  static const std::vector<std::string> order{"ingest", "prep", "select-k", "fit", "map", "report"};
  auto rank = [&](const std::string& s) {
    return std::find(order.begin(), order.end(), s) - order.begin();
  };
  Json entries = Json::array();
  bool placed = false;
  for (auto& e : manifest["entries"]) {
    const auto name = e.value("stage", "");
    if (name == stage) continue;
    if (!placed && rank(name) > rank(std::string(stage))) {
      entries.push_back(entry);
      placed = true;
    }
    entries.push_back(e);
  }
  if (!placed) entries.push_back(entry);
  manifest["entries"] = std::move(entries);
  write_file(path, manifest.dump(2) + "\n");
}

Settings common_settings(const RunConfig& cfg) {
  return {{"out-dir", cfg.out_dir.generic_string()}};
}

Settings lda_settings(const RunConfig& cfg) {
  Settings s;
  s.emplace_back("alpha", cfg.alpha ? artifact::format_double(*cfg.alpha) : "50/k");
  s.emplace_back("beta", artifact::format_double(cfg.beta));
  s.emplace_back("iterations", std::to_string(cfg.iterations));
  s.emplace_back("thin", std::to_string(cfg.thin));
  s.emplace_back("runs", std::to_string(cfg.runs));
  s.emplace_back("seed-list", join(cfg.seeds));
  s.emplace_back("posterior", cfg.posterior);
  return s;
}

artifact::Ref stopword_ref(const fs::path& path, std::string_view builtin_name, std::string_view builtin_text,
                           std::string& text_out) {
  if (path.empty()) {
    text_out = std::string(builtin_text);
    return {"builtin:" + std::string(builtin_name), text::sha256_hex(text_out)};
  }
  if (!fs::exists(path)) throw Error(ErrorKind::BadConfig, "stopword file " + path.string() + " not found");
  text_out = read_file(path);
  return {path.generic_string(), text::sha256_hex(text_out)};
}

}  // namespace

StageResult cmd_ingest(const RunConfig& cfg) {
  if (cfg.input.empty()) throw Error(ErrorKind::BadConfig, "ingest needs --input");
  if (!fs::exists(cfg.input)) throw Error(ErrorKind::BadConfig, "input " + cfg.input.string() + " not found");
  if (cfg.min_year > cfg.max_year) throw Error(ErrorKind::BadConfig, "min-year exceeds max-year");
  ensure_dir(cfg.out_dir);

  corpus::IngestOptions opts;
  opts.columns = cfg.columns;
  opts.min_year = cfg.min_year;
  opts.max_year = cfg.max_year;
  opts.ingested_at = timestamp();
  const auto bytes = read_file(cfg.input);
  corpus::Corpus c = corpus::parse_bib_csv_text(bytes, opts, cfg.input.generic_string());
  const auto rows = c.documents.size();
  c = corpus::drop_missing_abstracts(std::move(c));

  std::vector<ManifestInput> inputs{{cfg.input, text::sha256_hex(bytes)}};
  if (!cfg.area_map.empty()) {
    if (!fs::exists(cfg.area_map)) {
      throw Error(ErrorKind::BadConfig, "area map " + cfg.area_map.string() + " not found");
    }
    const auto map_bytes = read_file(cfg.area_map);
    c = corpus::merge_subject_areas(std::move(c), corpus::parse_area_mapping_text(map_bytes));
    inputs.push_back({cfg.area_map, text::sha256_hex(map_bytes)});
  } else {
    c.provenance.warnings.push_back("no area mapping supplied; subject areas left empty");
  }

  const fs::path out = cfg.out_dir / kCorpusFile;
  write_file(out, artifact::corpus_to_json(c));

  Settings s = common_settings(cfg);
  s.emplace_back("input", cfg.input.generic_string());
  s.emplace_back("area-map", cfg.area_map.generic_string());
  s.emplace_back("col-title", cfg.columns.title);
  s.emplace_back("col-abstract", cfg.columns.abstract);
  s.emplace_back("col-year", cfg.columns.year);
  s.emplace_back("col-citations", cfg.columns.citations);
  s.emplace_back("col-source", cfg.columns.source);
  s.emplace_back("min-year", std::to_string(cfg.min_year));
  s.emplace_back("max-year", std::to_string(cfg.max_year));
  record(cfg, "ingest", s, inputs, {out});

  std::ostringstream summary;
  summary << "rows: " << rows << "\n"
          << "documents with abstract: " << c.documents.size() << "\n"
          << "warnings: " << c.provenance.warnings.size() << "\n"
          << "wrote " << out.string() << "\n";
  return {out, {out}, summary.str()};
}

StageResult cmd_prep(const RunConfig& cfg) {
  const fs::path in = cfg.out_dir / kCorpusFile;
  const auto loaded = load_artifact(in, "ingest");
  const corpus::Corpus c = artifact::corpus_from_json(loaded.bytes);
  if (cfg.min_count < 1) throw Error(ErrorKind::BadConfig, "min-count must be >= 1");

  std::string standard_text, custom_text;
  artifact::DtmArtifact a;
  a.standard_stopwords = stopword_ref(cfg.standard_stopwords, "stopwords_en.txt",
                                      textprep::builtin_standard_stopwords_text(), standard_text);
  a.custom_stopwords = stopword_ref(cfg.custom_stopwords, "appendix_a_stopwords.txt",
                                    textprep::builtin_custom_stopwords_text(), custom_text);
  const auto standard = textprep::parse_stopwords(standard_text, textprep::StopwordKind::Standard);
  const auto custom = textprep::parse_stopwords(custom_text, textprep::StopwordKind::Custom);

  auto prep = textprep::preprocess_corpus(c, standard, custom);
  const auto vocab = dtm::build_vocabulary(prep.docs, cfg.min_count);
  a.matrix = dtm::build_matrix(prep.docs, vocab);
  a.min_count = cfg.min_count;
  a.empty_after_preprocessing = std::move(prep.empty_ids);
  a.corpus = {kCorpusFile, loaded.sha256};

  const fs::path out = cfg.out_dir / kDtmFile;
  write_file(out, artifact::dtm_to_json(a));

  Settings s = common_settings(cfg);
  s.emplace_back("standard-stopwords", cfg.standard_stopwords.generic_string());
  s.emplace_back("custom-stopwords", cfg.custom_stopwords.generic_string());
  s.emplace_back("min-count", std::to_string(cfg.min_count));
  std::vector<ManifestInput> inputs{{in, loaded.sha256}};
  if (!cfg.standard_stopwords.empty()) inputs.push_back({cfg.standard_stopwords, a.standard_stopwords.sha256});
  if (!cfg.custom_stopwords.empty()) inputs.push_back({cfg.custom_stopwords, a.custom_stopwords.sha256});
  record(cfg, "prep", s, inputs, {out});

  std::ostringstream summary;
  summary << "documents: " << a.matrix.num_docs() << "\n"
          << "vocabulary: " << a.matrix.num_terms() << "\n"
          << "tokens: " << a.matrix.total_tokens() << "\n"
          << "empty after preprocessing: " << a.empty_after_preprocessing.size() << "\n"
          << "excluded (no in-vocabulary tokens): " << a.matrix.excluded_ids.size() << "\n"
          << "wrote " << out.string() << "\n";
  return {out, {out}, summary.str()};
}

StageResult cmd_select_k(const RunConfig& cfg, const Progress& progress) {
  const fs::path in = cfg.out_dir / kDtmFile;
  const auto loaded = load_artifact(in, "prep");
  const auto dtm_art = artifact::dtm_from_json(loaded.bytes);
  const auto grid = parse_grid(cfg.grid);
  if (grid.front() < 2) throw Error(ErrorKind::BadConfig, "k-grid values must be >= 2");
  RunConfig c = cfg;
  c.k = grid.front();
  lda::LdaConfig lcfg = c.lda_config();
  lcfg.validate();
  const auto options = cfg.selection_options();

  modelselect::ChainCache cache;
  if (cfg.resume) {
    const fs::path dir = cfg.out_dir / kChainDir / loaded.sha256.substr(0, 16);
    ensure_dir(dir);
    auto chain_path = [dir](int k, std::uint64_t seed) {
      char name[64];
      std::snprintf(name, sizeof name, "k%03d_s%llu.json", k, static_cast<unsigned long long>(seed));
      return dir / name;
    };
    cache.load = [chain_path](int k, std::uint64_t seed) -> std::optional<lda::LdaModel> {
      const auto p = chain_path(k, seed);
      if (!fs::exists(p)) return std::nullopt;
      try {
        return artifact::chain_from_json(read_file(p));
      } catch (const Error&) {
        return std::nullopt;  // unreadable or stale entry, recompute
      }
    };
    cache.store = [chain_path](int k, std::uint64_t seed, const lda::LdaModel& m) {
      write_file(chain_path(k, seed), artifact::chain_to_json(m));
    };
  }

  auto result = modelselect::select_num_topics(dtm_art.matrix, lcfg, grid, options, cache, progress);

  artifact::SelectionArtifact a;
  a.series = std::move(result.series);
  a.config = lcfg;
  a.options = options;
  a.runs = std::move(result.runs);
  a.run_k = std::move(result.run_k);
  a.dtm = {kDtmFile, loaded.sha256};
  const fs::path out = cfg.out_dir / kSelectionFile;
  write_file(out, artifact::selection_to_json(a));

  Settings s = common_settings(cfg);
  s.emplace_back("k-grid", cfg.grid);
  for (auto& kv : lda_settings(cfg)) s.push_back(std::move(kv));
  s.emplace_back("arun", cfg.arun);
  s.emplace_back("griffiths", cfg.griffiths);
  record(cfg, "select-k", s, {{in, loaded.sha256}}, {out});

  std::ostringstream summary;
  summary << "candidates: " << a.series.candidates.size() << " (" << a.series.candidates.front()
          << ".." << a.series.candidates.back() << ")\n"
          << "chains: " << a.runs.size() << "\n"
          << "retained samples per chain: " << lcfg.retained_samples() << "\n";
  for (std::size_t i = 0; i < a.series.candidates.size(); ++i) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "  k=%-4d composite %.4f\n", a.series.candidates[i],
                  a.series.composite[i]);
    summary << buf;
  }
  for (const auto& w : a.series.warnings) summary << "warning: " << w << "\n";
  summary << "chosen k: " << a.series.chosen_k << "\n"
          << "wrote " << out.string() << "\n";
  return {out, {out}, summary.str()};
}

StageResult cmd_fit(const RunConfig& cfg) {
  const fs::path in = cfg.out_dir / kDtmFile;
  const auto loaded = load_artifact(in, "prep");
  const auto dtm_art = artifact::dtm_from_json(loaded.bytes);
  std::vector<ManifestInput> inputs{{in, loaded.sha256}};

  RunConfig c = cfg;
  if (c.k == 0) {
    const fs::path sel_path = cfg.out_dir / kSelectionFile;
    if (!fs::exists(sel_path)) {
      throw Error(ErrorKind::BadConfig, "fit needs --k or a selection.json from select-k");
    }
    const auto sel_loaded = load_artifact(sel_path, "select-k");
    const auto sel = artifact::selection_from_json(sel_loaded.bytes);
    if (sel.dtm.sha256 != loaded.sha256) {
      throw Error(ErrorKind::SchemaMismatch, "selection.json was computed on a different dtm.json");
    }
    c.k = sel.series.chosen_k;
    inputs.push_back({sel_path, sel_loaded.sha256});
  }
  lda::LdaConfig lcfg = c.lda_config();
  lcfg.validate();
  auto fit = lda::fit_best_of_runs(dtm_art.matrix, lcfg, 1);

  artifact::ModelArtifact a;
  a.model = std::move(fit.best);
  a.best_index = fit.best_index;
  a.runs = std::move(fit.runs);
  a.vocabulary_ref = {kDtmFile, loaded.sha256};
  a.doc_ids_ref = {kDtmFile, loaded.sha256};
  const fs::path out = cfg.out_dir / kModelFile;
  write_file(out, artifact::model_to_json(a));

  Settings s = common_settings(cfg);
  s.emplace_back("k", std::to_string(c.k));
  for (auto& kv : lda_settings(cfg)) s.push_back(std::move(kv));
  record(cfg, "fit", s, inputs, {out});

  std::ostringstream summary;
  char buf[128];
  std::snprintf(buf, sizeof buf, "k: %d\nalpha: %g\nbeta: %g\n", lcfg.num_topics,
                lcfg.effective_alpha(), lcfg.beta);
  summary << buf
          << "runs: " << lcfg.runs << "\n"
          << "retained samples: " << a.model.retained_samples << "\n";
  std::snprintf(buf, sizeof buf, "best run: %zu (seed %llu), max log p(w|z) = %.6f\n", a.best_index,
                static_cast<unsigned long long>(a.model.seed_used), a.model.max_loglik());
  summary << buf << "wrote " << out.string() << "\n";
  return {out, {out}, summary.str()};
}

StageResult cmd_map(const RunConfig& cfg) {
  const fs::path model_path = cfg.out_dir / kModelFile;
  const fs::path dtm_path = cfg.out_dir / kDtmFile;
  const fs::path corpus_path = cfg.out_dir / kCorpusFile;
  const auto model_loaded = load_artifact(model_path, "fit");
  const auto dtm_loaded = load_artifact(dtm_path, "prep");
  const auto corpus_loaded = load_artifact(corpus_path, "ingest");
  const auto model = artifact::model_from_json(model_loaded.bytes);
  const auto dtm_art = artifact::dtm_from_json(dtm_loaded.bytes);
  if (model.vocabulary_ref.sha256 != dtm_loaded.sha256 || model.doc_ids_ref.sha256 != dtm_loaded.sha256) {
    throw Error(ErrorKind::SchemaMismatch, "model.json was fitted on a different dtm.json");
  }
  if (dtm_art.corpus.sha256 != corpus_loaded.sha256) {
    throw Error(ErrorKind::SchemaMismatch, "dtm.json was built from a different corpus.json");
  }
  const auto c = artifact::corpus_from_json(corpus_loaded.bytes);

  artifact::MapArtifact a;
  a.map = scimap::build_science_map(model.model, dtm_art.matrix, c, cfg.map_options());
  a.model = {kModelFile, model_loaded.sha256};
  a.corpus = {kCorpusFile, corpus_loaded.sha256};
  const fs::path out = cfg.out_dir / kMapFile;
  write_file(out, artifact::map_to_json(a));

  Settings s = common_settings(cfg);
  s.emplace_back("reference-year", std::to_string(cfg.reference_year));
  s.emplace_back("growth-horizon", std::to_string(cfg.growth_horizon));
  s.emplace_back("quantile-type", std::to_string(cfg.quantile_type));
  s.emplace_back("top-terms", std::to_string(cfg.top_terms));
  s.emplace_back("salient-terms", std::to_string(cfg.salient_terms));
  s.emplace_back("aggregation", cfg.aggregation);
  record(cfg, "map", s,
         {{model_path, model_loaded.sha256}, {dtm_path, dtm_loaded.sha256}, {corpus_path, corpus_loaded.sha256}},
         {out});

  std::ostringstream summary;
  summary << "topics: " << a.map.profiles.size() << "\n"
          << "significant topics (interest and impact > Q3):";
  for (int id : a.map.significant) summary << " T" << id;
  summary << "\n";
  if (!a.map.aggregation_disagreements.empty()) {
    summary << "grid cell differs under the other aggregation for:";
    for (int id : a.map.aggregation_disagreements) summary << " T" << id;
    summary << "\n";
  }
  for (const auto& w : a.map.warnings) summary << "warning: " << w << "\n";
  summary << "wrote " << out.string() << "\n";
  return {out, {out}, summary.str()};
}

StageResult cmd_report(const RunConfig& cfg) {
  const fs::path map_path = cfg.out_dir / kMapFile;
  const auto map_loaded = load_artifact(map_path, "map");
  const auto map_art = artifact::map_from_json(map_loaded.bytes);
  const auto& m = map_art.map;
  std::vector<ManifestInput> inputs{{map_path, map_loaded.sha256}};

  const fs::path dir = cfg.out_dir / kReportDir;
  ensure_dir(dir);
  std::vector<fs::path> outputs;
  auto emit = [&](const char* name, const std::string& bytes) {
    const fs::path p = dir / name;
    write_file(p, bytes);
    outputs.push_back(p);
  };

  const fs::path sel_path = cfg.out_dir / kSelectionFile;
  std::optional<artifact::SelectionArtifact> selection;
  if (fs::exists(sel_path)) {
    const auto sel_loaded = load_artifact(sel_path, "select-k");
    selection = artifact::selection_from_json(sel_loaded.bytes);
    inputs.push_back({sel_path, sel_loaded.sha256});
  }

  if (cfg.json) {
    Json j;
    j["schema"] = "slr.report/1";
    j["sciencemap"] = Json{{"artifact", kMapFile}, {"sha256", map_loaded.sha256}};
    j["chosen_k"] = selection ? Json(selection->series.chosen_k) : Json(nullptr);
    Json topics = Json::array();
    for (const auto& p : m.profiles) {
      const bool sig = std::find(m.significant.begin(), m.significant.end(), p.topic_id) != m.significant.end();
      if (!sig) continue;
      Json t;
      t["topic_id"] = p.topic_id;
      t["papers"] = p.paper_count;
      t["citations"] = p.citation_sum;
      t["cpp"] = artifact::format_double(p.cpp);
      t["grid_cell"] = std::string(1, p.grid_cell);
      t["growth_pct"] = artifact::format_double(p.growth_pct);
      Json terms = Json::array();
      for (const auto& [term, w] : p.top_terms) terms.push_back(term);
      t["top_terms"] = std::move(terms);
      topics.push_back(std::move(t));
    }
    j["significant_topics"] = std::move(topics);
    emit("summary.json", j.dump(2) + "\n");
  }
  if (cfg.csv) {
    emit("profiles.csv", report::profiles_csv(m));
    const auto evo = scimap::evolution_series(m.profiles);
    emit("evolution.csv", report::evolution_csv(evo));
    emit("correlation.csv", report::correlation_csv(m));
    emit("salient_terms.csv", report::salient_csv(m));
    if (selection) emit("selection.csv", report::selection_csv(selection->series));
    const fs::path dtm_path = cfg.out_dir / kDtmFile;
    if (fs::exists(dtm_path)) {
      const auto dtm_loaded = load_artifact(dtm_path, "prep");
      inputs.push_back({dtm_path, dtm_loaded.sha256});
      emit("dtm_triplets.csv", report::dtm_triplets_csv(artifact::dtm_from_json(dtm_loaded.bytes).matrix));
    }
  }
  if (cfg.svg) {
    emit("scatter.svg", svg::scatter_svg(m));
    emit("evolution.svg", svg::evolution_svg(m, m.significant));
  }
  if (outputs.empty()) throw Error(ErrorKind::BadConfig, "report has every output type disabled");

  Settings s = common_settings(cfg);
  s.emplace_back("json", cfg.json ? "true" : "false");
  s.emplace_back("csv", cfg.csv ? "true" : "false");
  s.emplace_back("svg", cfg.svg ? "true" : "false");
  record(cfg, "report", s, inputs, outputs);

  std::ostringstream summary;
  for (const auto& p : outputs) summary << "wrote " << p.string() << "\n";
  return {outputs.front(), outputs, summary.str()};
}

}  // namespace slr::pipeline

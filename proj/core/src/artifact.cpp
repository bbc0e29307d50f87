#include "slr/artifact.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "json.hpp"
#include "slr/error.hpp"
#include "slr/random.hpp"

namespace slr::artifact {

using Json = nlohmann::ordered_json;

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

// Arrays of scalars, and arrays of short scalar tuples, stay on one line.
bool inline_array(const Json& j) {
  bool all_scalar = true;
  bool all_tuples = true;
  for (const auto& e : j) {
    if (!is_scalar(e)) all_scalar = false;
    if (!e.is_array() || e.size() > 3 || !std::all_of(e.begin(), e.end(), is_scalar)) {
      all_tuples = false;
    }
  }
  return all_scalar || all_tuples;
}

void write_json(const Json& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        out += Json(it.key()).dump();
        out += ": ";
        write_json(it.value(), out, indent + 2);
      }
      out += "\n";
      out.append(static_cast<std::size_t>(indent), ' ');
      out += "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      if (inline_array(j)) {
        out += "[";
        bool first = true;
        for (const auto& e : j) {
          if (!first) out += ", ";
          first = false;
          write_json(e, out, indent);
        }
        out += "]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        write_json(e, out, indent + 2);
      }
      out += "\n";
      out.append(static_cast<std::size_t>(indent), ' ');
      out += "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

std::string dump(const Json& j) {
  std::string out;
  write_json(j, out, 0);
  out += "\n";
  return out;
}

Json parse_checked(std::string_view text, std::string_view schema) {
  Json j = Json::parse(text.begin(), text.end(), nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw Error(ErrorKind::SchemaMismatch, "artifact is not a JSON object");
  }
  const auto it = j.find("schema");
  if (it == j.end() || !it->is_string() || it->get<std::string>() != schema) {
    const std::string found = it != j.end() && it->is_string() ? it->get<std::string>() : "<none>";
    throw Error(ErrorKind::SchemaMismatch,
                "expected schema " + std::string(schema) + ", found " + found);
  }
  return j;
}

// Runs a reader and converts structural JSON errors into SchemaMismatch.
template <typename Fn>
auto guarded(std::string_view what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::SchemaMismatch, std::string(what) + ": " + e.what());
  }
}

Json number(double x) {
  return std::isfinite(x) ? Json(x) : Json(nullptr);
}

double to_double(const Json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return j.get<double>();
}

Json doubles(std::span<const double> v) {
  Json a = Json::array();
  for (double x : v) a.push_back(number(x));
  return a;
}

std::vector<double> read_doubles(const Json& j) {
  std::vector<double> v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(to_double(e));
  return v;
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(doubles(m.row(r)));
  return rows;
}

Matrix read_matrix(const Json& j, std::size_t expected_cols = 0) {
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? expected_cols : j.at(0).size();
  if (expected_cols != 0 && cols != expected_cols) {
    throw Error(ErrorKind::SchemaMismatch, "matrix has " + std::to_string(cols) + " columns, expected " +
                                               std::to_string(expected_cols));
  }
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = j.at(r);
    if (row.size() != cols) throw Error(ErrorKind::SchemaMismatch, "ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = to_double(row.at(c));
  }
  return m;
}

Json ref_json(const Ref& r) { return Json{{"artifact", r.artifact}, {"sha256", r.sha256}}; }

Ref read_ref(const Json& j) {
  return {j.at("artifact").get<std::string>(), j.at("sha256").get<std::string>()};
}

Json strings(const std::vector<std::string>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

std::vector<std::string> read_strings(const Json& j) { return j.get<std::vector<std::string>>(); }

Json config_json(const lda::LdaConfig& c) {
  Json j;
  j["num_topics"] = c.num_topics;
  j["alpha"] = c.alpha ? number(*c.alpha) : Json(nullptr);
  j["effective_alpha"] = number(c.effective_alpha());
  j["beta"] = number(c.beta);
  j["iterations"] = c.iterations;
  j["thin"] = c.thin;
  j["runs"] = c.runs;
  j["seeds"] = c.seeds;
  j["posterior"] = c.posterior == lda::Posterior::Mean ? "mean" : "last";
  return j;
}

lda::LdaConfig read_config(const Json& j) {
  lda::LdaConfig c;
  c.num_topics = j.at("num_topics").get<int>();
  if (!j.at("alpha").is_null()) c.alpha = j.at("alpha").get<double>();
  c.beta = j.at("beta").get<double>();
  c.iterations = j.at("iterations").get<int>();
  c.thin = j.at("thin").get<int>();
  c.runs = j.at("runs").get<int>();
  c.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
  const auto posterior = j.at("posterior").get<std::string>();
  if (posterior != "mean" && posterior != "last") {
    throw Error(ErrorKind::SchemaMismatch, "unknown posterior mode " + posterior);
  }
  c.posterior = posterior == "mean" ? lda::Posterior::Mean : lda::Posterior::Last;
  return c;
}

Json runs_json(const std::vector<lda::RunSummary>& runs, const std::vector<int>* run_k) {
  Json a = Json::array();
  for (std::size_t i = 0; i < runs.size(); ++i) {
    Json r;
    if (run_k) r["k"] = (*run_k)[i];
    r["seed"] = runs[i].seed;
    r["max_loglik"] = number(runs[i].max_loglik);
    r["loglik_trace"] = doubles(runs[i].loglik_trace);
    a.push_back(std::move(r));
  }
  return a;
}

std::vector<lda::RunSummary> read_runs(const Json& j, std::vector<int>* run_k) {
  std::vector<lda::RunSummary> runs;
  for (const auto& r : j) {
    if (run_k) run_k->push_back(r.at("k").get<int>());
    runs.push_back({r.at("seed").get<std::uint64_t>(), read_doubles(r.at("loglik_trace")),
                    to_double(r.at("max_loglik"))});
  }
  return runs;
}

void chain_fields(Json& j, const lda::LdaModel& m) {
  j["config"] = config_json(m.config);
  j["seed_used"] = m.seed_used;
  j["rng"] = std::string(Rng::kAlgorithm);
  j["retained_samples"] = m.retained_samples;
  j["loglik_trace"] = doubles(m.loglik_trace);
  j["phi"] = matrix_json(m.phi);
  j["theta"] = matrix_json(m.theta);
}

lda::LdaModel read_chain_fields(const Json& j) {
  lda::LdaModel m;
  m.config = read_config(j.at("config"));
  m.seed_used = j.at("seed_used").get<std::uint64_t>();
  if (j.at("rng").get<std::string>() != Rng::kAlgorithm) {
    throw Error(ErrorKind::SchemaMismatch, "model was produced with a different generator");
  }
  m.retained_samples = j.at("retained_samples").get<int>();
  m.loglik_trace = read_doubles(j.at("loglik_trace"));
  m.phi = read_matrix(j.at("phi"));
  m.theta = read_matrix(j.at("theta"), m.phi.rows());
  return m;
}

std::string_view aggregation_name(scimap::Aggregation a) {
  return a == scimap::Aggregation::Hard ? "hard" : "fractional";
}

Json boundaries_json(const scimap::Boundaries& b) {
  return Json{{"median", number(b.median)}, {"q3", number(b.q3)}, {"p90", number(b.p90)}};
}

scimap::Boundaries read_boundaries(const Json& j) {
  return {to_double(j.at("median")), to_double(j.at("q3")), to_double(j.at("p90"))};
}

}  // namespace

std::string peek_schema(std::string_view text) {
  Json j = Json::parse(text.begin(), text.end(), nullptr, false);
  if (j.is_discarded() || !j.is_object()) return "";
  const auto it = j.find("schema");
  return it != j.end() && it->is_string() ? it->get<std::string>() : "";
}

// ---- corpus

std::string corpus_to_json(const corpus::Corpus& c) {
  Json j;
  j["schema"] = kCorpusSchema;
  const auto& p = c.provenance;
  j["provenance"] = Json{{"input_file", p.input_file},
                         {"input_sha256", p.input_sha256},
                         {"ingested_at", p.ingested_at},
                         {"counts", p.counts},
                         {"warnings", strings(p.warnings)}};
  Json docs = Json::array();
  for (const auto& d : c.documents) {
    Json doc;
    doc["id"] = d.id;
    doc["title"] = d.title;
    doc["abstract"] = d.abstract;
    doc["year"] = d.year ? Json(*d.year) : Json(nullptr);
    doc["citations"] = d.citations;
    doc["source"] = d.source;
    doc["subject_areas"] = d.subject_areas;
    docs.push_back(std::move(doc));
  }
  j["documents"] = std::move(docs);
  return dump(j);
}

corpus::Corpus corpus_from_json(std::string_view text) {
  const Json j = parse_checked(text, kCorpusSchema);
  return guarded("corpus", [&] {
    corpus::Corpus c;
    const auto& p = j.at("provenance");
    c.provenance.input_file = p.at("input_file").get<std::string>();
    c.provenance.input_sha256 = p.at("input_sha256").get<std::string>();
    c.provenance.ingested_at = p.at("ingested_at").get<std::string>();
    c.provenance.counts = p.at("counts").get<std::map<std::string, std::int64_t>>();
    c.provenance.warnings = read_strings(p.at("warnings"));
    for (const auto& d : j.at("documents")) {
      corpus::Document doc;
      doc.id = d.at("id").get<std::string>();
      doc.title = d.at("title").get<std::string>();
      doc.abstract = d.at("abstract").get<std::string>();
      if (!d.at("year").is_null()) doc.year = d.at("year").get<int>();
      doc.citations = d.at("citations").get<std::int64_t>();
      doc.source = d.at("source").get<std::string>();
      doc.subject_areas = d.at("subject_areas").get<std::set<std::string>>();
      c.documents.push_back(std::move(doc));
    }
    return c;
  });
}

// ---- dtm

std::string dtm_to_json(const DtmArtifact& a) {
  const auto& m = a.matrix;
  Json j;
  j["schema"] = kDtmSchema;
  j["corpus"] = ref_json(a.corpus);
  j["standard_stopwords"] = ref_json(a.standard_stopwords);
  j["custom_stopwords"] = ref_json(a.custom_stopwords);
  j["min_count"] = a.min_count;
  j["num_docs"] = m.num_docs();
  j["num_terms"] = m.num_terms();
  j["vocabulary"] = strings(m.vocabulary);
  j["doc_ids"] = strings(m.doc_ids);
  j["lengths"] = m.lengths;
  Json rows = Json::array();
  for (const auto& row : m.rows) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(Json::array({e.term, e.count}));
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  j["excluded_ids"] = strings(m.excluded_ids);
  j["empty_after_preprocessing"] = strings(a.empty_after_preprocessing);
  return dump(j);
}

DtmArtifact dtm_from_json(std::string_view text) {
  const Json j = parse_checked(text, kDtmSchema);
  return guarded("dtm", [&] {
    DtmArtifact a;
    a.corpus = read_ref(j.at("corpus"));
    a.standard_stopwords = read_ref(j.at("standard_stopwords"));
    a.custom_stopwords = read_ref(j.at("custom_stopwords"));
    a.min_count = j.at("min_count").get<int>();
    auto& m = a.matrix;
    m.vocabulary = read_strings(j.at("vocabulary"));
    m.doc_ids = read_strings(j.at("doc_ids"));
    m.lengths = j.at("lengths").get<std::vector<std::uint32_t>>();
    for (const auto& r : j.at("rows")) {
      std::vector<dtm::Entry> row;
      for (const auto& e : r) row.push_back({e.at(0).get<std::uint32_t>(), e.at(1).get<std::uint32_t>()});
      m.rows.push_back(std::move(row));
    }
    m.excluded_ids = read_strings(j.at("excluded_ids"));
    a.empty_after_preprocessing = read_strings(j.at("empty_after_preprocessing"));
    if (m.rows.size() != m.doc_ids.size() || m.rows.size() != m.lengths.size()) {
      throw Error(ErrorKind::SchemaMismatch, "dtm rows, doc_ids and lengths differ in size");
    }
    for (std::size_t d = 0; d < m.rows.size(); ++d) {
      std::uint64_t total = 0;
      for (const auto& e : m.rows[d]) {
        if (e.term >= m.vocabulary.size() || e.count == 0) {
          throw Error(ErrorKind::SchemaMismatch, "dtm entry out of range");
        }
        total += e.count;
      }
      if (total != m.lengths[d]) throw Error(ErrorKind::SchemaMismatch, "dtm length mismatch");
    }
    return a;
  });
}

// ---- models

std::string chain_to_json(const lda::LdaModel& m) {
  Json j;
  j["schema"] = kChainSchema;
  chain_fields(j, m);
  return dump(j);
}

lda::LdaModel chain_from_json(std::string_view text) {
  const Json j = parse_checked(text, kChainSchema);
  return guarded("chain", [&] { return read_chain_fields(j); });
}

std::string model_to_json(const ModelArtifact& a) {
  Json j;
  j["schema"] = kModelSchema;
  j["vocabulary_ref"] = ref_json(a.vocabulary_ref);
  j["doc_ids_ref"] = ref_json(a.doc_ids_ref);
  j["decisions"] = Json{
      {"best_run", "greatest maximum retained log p(w|z); ties to the lower seed index"},
      {"posterior", a.model.config.posterior == lda::Posterior::Mean
                        ? "mean of retained-sample estimates within the best chain"
                        : "last retained sample of the best chain"},
      {"sampler", "collapsed Gibbs, p(z=k) ~ (n_dk + alpha)(n_kv + beta)/(n_k + V beta)"},
      {"burn_in", "none; first retained sample at sweep = thin"}};
  j["best_index"] = a.best_index;
  j["runs"] = runs_json(a.runs, nullptr);
  chain_fields(j, a.model);
  return dump(j);
}

ModelArtifact model_from_json(std::string_view text) {
  const Json j = parse_checked(text, kModelSchema);
  return guarded("model", [&] {
    ModelArtifact a;
    a.vocabulary_ref = read_ref(j.at("vocabulary_ref"));
    a.doc_ids_ref = read_ref(j.at("doc_ids_ref"));
    a.best_index = j.at("best_index").get<std::size_t>();
    a.runs = read_runs(j.at("runs"), nullptr);
    a.model = read_chain_fields(j);
    return a;
  });
}

// ---- selection

std::string selection_to_json(const SelectionArtifact& a) {
  const auto& s = a.series;
  Json j;
  j["schema"] = kSelectionSchema;
  j["dtm"] = ref_json(a.dtm);
  Json cfg = config_json(a.config);
  cfg.erase("num_topics");
  cfg.erase("effective_alpha");
  cfg["alpha_rule"] = a.config.alpha ? "fixed" : "50 / k";
  j["config"] = std::move(cfg);
  j["options"] = Json{
      {"arun", a.options.arun == modelselect::ArunVariant::Symmetric ? "symmetric" : "asymmetric"},
      {"griffiths_samples",
       a.options.griffiths == modelselect::GriffithsSamples::BestRun ? "best_run" : "all_runs"}};
  j["decisions"] = Json{
      {"normalization", "per-metric min-max; minimize metrics flipped as 1 - x; constant series -> 0.5"},
      {"composite", "sum of normalized metrics, NaN counted as 0; argmax, ties to smaller k"},
      {"log_floor", modelselect::kLogFloor},
      {"best_run", "greatest maximum retained log p(w|z)"}};
  j["candidates"] = s.candidates;
  Json metrics;
  for (std::size_t m = 0; m < modelselect::kNumMetrics; ++m) {
    metrics[std::string(modelselect::kMetricNames[m])] =
        Json{{"direction", modelselect::kDirections[m] == modelselect::Direction::Maximize ? "maximize"
                                                                                         : "minimize"},
             {"raw", doubles(s.raw[m])},
             {"normalized", doubles(s.normalized[m])}};
  }
  j["metrics"] = std::move(metrics);
  j["composite"] = doubles(s.composite);
  j["chosen_k"] = s.chosen_k;
  j["warnings"] = strings(s.warnings);
  j["runs"] = runs_json(a.runs, &a.run_k);
  return dump(j);
}

SelectionArtifact selection_from_json(std::string_view text) {
  const Json j = parse_checked(text, kSelectionSchema);
  return guarded("selection", [&] {
    SelectionArtifact a;
    a.dtm = read_ref(j.at("dtm"));
    Json cfg = j.at("config");
    cfg["num_topics"] = 2;
    a.config = read_config(cfg);
    a.options.arun = j.at("options").at("arun").get<std::string>() == "asymmetric"
                         ? modelselect::ArunVariant::Asymmetric
                         : modelselect::ArunVariant::Symmetric;
    a.options.griffiths = j.at("options").at("griffiths_samples").get<std::string>() == "all_runs"
                              ? modelselect::GriffithsSamples::AllRuns
                              : modelselect::GriffithsSamples::BestRun;
    auto& s = a.series;
    s.candidates = j.at("candidates").get<std::vector<int>>();
    for (std::size_t m = 0; m < modelselect::kNumMetrics; ++m) {
      const auto& mj = j.at("metrics").at(std::string(modelselect::kMetricNames[m]));
      s.raw[m] = read_doubles(mj.at("raw"));
      s.normalized[m] = read_doubles(mj.at("normalized"));
      if (s.raw[m].size() != s.candidates.size() || s.normalized[m].size() != s.candidates.size()) {
        throw Error(ErrorKind::SchemaMismatch, "metric series length differs from candidates");
      }
    }
    s.composite = read_doubles(j.at("composite"));
    s.chosen_k = j.at("chosen_k").get<int>();
    s.warnings = read_strings(j.at("warnings"));
    a.runs = read_runs(j.at("runs"), &a.run_k);
    return a;
  });
}

// ---- science map

std::string map_to_json(const MapArtifact& a) {
  const auto& m = a.map;
  const auto& o = m.options;
  Json j;
  j["schema"] = kMapSchema;
  j["model"] = ref_json(a.model);
  j["corpus"] = ref_json(a.corpus);
  j["options"] = Json{{"reference_year", o.reference_year},
                      {"growth_horizon", o.growth_horizon},
                      {"quantile_type", o.quantile_type},
                      {"top_terms", o.top_terms},
                      {"salient_terms", o.salient_terms},
                      {"aggregation", aggregation_name(o.aggregation)}};
  j["decisions"] = Json{
      {"assignment", "dominant topic = argmax of the theta row, ties to the lowest index"},
      {"growth", "100 * (A - B) / max(B, 1); B = papers in years <= reference_year, "
                 "A = papers in (reference_year, reference_year + growth_horizon]"},
      {"quantiles", "Hyndman-Fan type " + std::to_string(o.quantile_type) + " at 0.5, 0.75, 0.9"},
      {"grid", "row = impact tier from the top (>p90, (q3,p90], (median,q3], <=median), "
               "column = interest tier ascending; cell = 'A' + 4 * row + column"},
      {"significant", "interest > q3 and impact > q3 (cells C, D, G, H)"},
      {"intertopic", "classical MDS of Jensen-Shannon distances; first non-zero loading of each axis positive"}};
  j["boundaries"] = Json{{"interest", boundaries_json(m.interest)}, {"impact", boundaries_json(m.impact)}};
  j["significant"] = m.significant;
  j["aggregation_disagreements"] = m.aggregation_disagreements;
  Json profiles = Json::array();
  for (const auto& p : m.profiles) {
    Json pj;
    pj["topic_id"] = p.topic_id;
    pj["paper_count"] = p.paper_count;
    pj["citation_sum"] = p.citation_sum;
    pj["cpp"] = number(p.cpp);
    pj["growth_pct"] = number(p.growth_pct);
    pj["grid_cell"] = std::string(1, p.grid_cell);
    Json terms = Json::array();
    for (const auto& [t, w] : p.top_terms) terms.push_back(Json::array({t, number(w)}));
    pj["top_terms"] = std::move(terms);
    Json yearly = Json::array();
    for (const auto& [y, t] : p.yearly) yearly.push_back(Json::array({y, t.papers, t.citations}));
    pj["yearly"] = std::move(yearly);
    pj["subject_area_bars"] = p.subject_area_bars;
    pj["fractional_papers"] = number(p.fractional_papers);
    pj["fractional_citations"] = number(p.fractional_citations);
    profiles.push_back(std::move(pj));
  }
  j["profiles"] = std::move(profiles);
  j["correlation"] = matrix_json(m.correlation);
  j["coords2d"] = matrix_json(m.embedding.coords);
  j["stress"] = number(m.embedding.stress);
  j["degenerate_embedding"] = m.embedding.degenerate;
  Json salient = Json::array();
  for (const auto& [t, f] : m.salient) salient.push_back(Json::array({t, f}));
  j["salient_terms"] = std::move(salient);
  j["warnings"] = strings(m.warnings);
  return dump(j);
}

MapArtifact map_from_json(std::string_view text) {
  const Json j = parse_checked(text, kMapSchema);
  return guarded("sciencemap", [&] {
    MapArtifact a;
    a.model = read_ref(j.at("model"));
    a.corpus = read_ref(j.at("corpus"));
    auto& m = a.map;
    const auto& o = j.at("options");
    m.options.reference_year = o.at("reference_year").get<int>();
    m.options.growth_horizon = o.at("growth_horizon").get<int>();
    m.options.quantile_type = o.at("quantile_type").get<int>();
    m.options.top_terms = o.at("top_terms").get<std::size_t>();
    m.options.salient_terms = o.at("salient_terms").get<std::size_t>();
    m.options.aggregation = o.at("aggregation").get<std::string>() == "fractional"
                                ? scimap::Aggregation::Fractional
                                : scimap::Aggregation::Hard;
    m.interest = read_boundaries(j.at("boundaries").at("interest"));
    m.impact = read_boundaries(j.at("boundaries").at("impact"));
    m.significant = j.at("significant").get<std::vector<int>>();
    m.aggregation_disagreements = j.at("aggregation_disagreements").get<std::vector<int>>();
    for (const auto& pj : j.at("profiles")) {
      scimap::TopicProfile p;
      p.topic_id = pj.at("topic_id").get<int>();
      p.paper_count = pj.at("paper_count").get<std::int64_t>();
      p.citation_sum = pj.at("citation_sum").get<std::int64_t>();
      p.cpp = to_double(pj.at("cpp"));
      p.growth_pct = to_double(pj.at("growth_pct"));
      const auto cell = pj.at("grid_cell").get<std::string>();
      if (cell.size() != 1) throw Error(ErrorKind::SchemaMismatch, "grid_cell must be one letter");
      p.grid_cell = cell[0];
      for (const auto& t : pj.at("top_terms")) {
        p.top_terms.emplace_back(t.at(0).get<std::string>(), to_double(t.at(1)));
      }
      for (const auto& y : pj.at("yearly")) {
        p.yearly[y.at(0).get<int>()] = {y.at(1).get<std::int64_t>(), y.at(2).get<std::int64_t>()};
      }
      p.subject_area_bars = pj.at("subject_area_bars").get<std::map<std::string, std::int64_t>>();
      p.fractional_papers = to_double(pj.at("fractional_papers"));
      p.fractional_citations = to_double(pj.at("fractional_citations"));
      m.profiles.push_back(std::move(p));
    }
    m.correlation = read_matrix(j.at("correlation"));
    m.embedding.coords = read_matrix(j.at("coords2d"), 2);
    m.embedding.stress = to_double(j.at("stress"));
    m.embedding.degenerate = j.at("degenerate_embedding").get<bool>();
    for (const auto& s : j.at("salient_terms")) {
      m.salient.emplace_back(s.at(0).get<std::string>(), s.at(1).get<std::uint64_t>());
    }
    m.warnings = read_strings(j.at("warnings"));
    return a;
  });
}

}  // namespace slr::artifact

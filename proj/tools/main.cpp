#include <unistd.h>

#include <charconv>
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "pipeline.hpp"
#include "slr/parallel.hpp"

namespace {

using slr::pipeline::RunConfig;

constexpr const char* kExitCodes =
    "Exit codes:\n"
    "  0  success\n"
    "  1  other failure (e.g. an output file could not be written)\n"
    "  2  bad configuration or input (unknown option, missing column, malformed CSV, empty vocabulary)\n"
    "  3  missing or mismatched artifact (run the earlier stage, or its inputs changed)\n"
    "  4  numerical failure (sampler, SVD or eigensolver)\n";

void add_lda_options(CLI::App* sub, RunConfig& cfg, std::string& alpha) {
  sub->add_option("--alpha", alpha, "Symmetric doc-topic prior per component; empty means 50/k")
      ->capture_default_str();
  sub->add_option("--beta", cfg.beta, "Symmetric topic-word prior")->capture_default_str();
  sub->add_option("--iterations", cfg.iterations, "Gibbs sweeps per chain")->capture_default_str();
  sub->add_option("--thin", cfg.thin, "Retain every thin-th sweep")->capture_default_str();
  sub->add_option("--runs", cfg.runs, "Chains per k")->capture_default_str();
  sub->add_option("--posterior", cfg.posterior, "mean of retained samples, or last")
      ->check(CLI::IsMember({"mean", "last"}))
      ->capture_default_str();
}

std::optional<double> parse_alpha(const std::string& s) {
  if (s.empty()) return std::nullopt;
  double v = 0;
  try {
    std::size_t used = 0;
    v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
  } catch (const std::exception&) {
    throw slr::Error(slr::ErrorKind::BadConfig, "alpha must be a number, got '" + s + "'");
  }
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  cfg.jobs = slr::default_jobs();
  std::string alpha;
  bool show_config = false;

  CLI::App app{"Literature-review topic modeling pipeline: ingest -> prep -> select-k -> fit -> map -> report",
               "slr"};
  app.footer(kExitCodes);
  app.set_version_flag("--version", SLR_VERSION);
  app.set_config("--config", "", "INI file with key=value settings; command-line flags override it");
  app.add_option("--out-dir", cfg.out_dir, "Directory holding all stage artifacts")->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "Worker threads for select-k")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--seed-list", cfg.seeds, "Chain seeds, comma separated")->delimiter(',')->capture_default_str();
  app.add_flag("--show-config", show_config, "Print the effective configuration as INI and exit");
  app.fallthrough();
  app.require_subcommand(0, 1);

  auto* ingest = app.add_subcommand("ingest", "Parse a bibliographic CSV export into corpus.json");
  ingest->add_option("--input", cfg.input, "Bibliographic CSV (RFC 4180, UTF-8)");
  ingest->add_option("--area-map", cfg.area_map, "CSV with columns source,area_code");
  ingest->add_option("--col-title", cfg.columns.title, "Title column")->capture_default_str();
  ingest->add_option("--col-abstract", cfg.columns.abstract, "Abstract column")->capture_default_str();
  ingest->add_option("--col-year", cfg.columns.year, "Year column")->capture_default_str();
  ingest->add_option("--col-citations", cfg.columns.citations, "Citation count column")->capture_default_str();
  ingest->add_option("--col-source", cfg.columns.source, "Source title column")->capture_default_str();
  ingest->add_option("--min-year", cfg.min_year, "Earliest plausible year")->capture_default_str();
  ingest->add_option("--max-year", cfg.max_year, "Latest plausible year")->capture_default_str();

  auto* prep = app.add_subcommand("prep", "Preprocess abstracts and build dtm.json");
  prep->add_option("--standard-stopwords", cfg.standard_stopwords, "Standard stopword file (default: bundled)");
  prep->add_option("--custom-stopwords", cfg.custom_stopwords, "Domain stopword stems (default: bundled list)");
  prep->add_option("--min-count", cfg.min_count, "Minimum corpus frequency of a term")->capture_default_str();

  auto* select = app.add_subcommand("select-k", "Score the k grid with four criteria into selection.json");
  select->add_option("--k-grid", cfg.grid, "first:last:step or a comma list")->capture_default_str();
  add_lda_options(select, cfg, alpha);
  select->add_option("--arun", cfg.arun, "KL form of the Arun criterion")
      ->check(CLI::IsMember({"symmetric", "asymmetric"}))
      ->capture_default_str();
  select->add_option("--griffiths", cfg.griffiths, "Log-likelihood samples for the Griffiths criterion")
      ->check(CLI::IsMember({"best_run", "all_runs"}))
      ->capture_default_str();
  select->add_flag("--resume,!--no-resume", cfg.resume, "Reuse cached chains under out-dir/chains")
      ->capture_default_str();

  auto* fit = app.add_subcommand("fit", "Fit the final model into model.json");
  fit->add_option("--k", cfg.k, "Number of topics; 0 takes chosen_k from selection.json")->capture_default_str();
  add_lda_options(fit, cfg, alpha);

  auto* map = app.add_subcommand("map", "Build sciencemap.json from the model and corpus");
  map->add_option("--reference-year", cfg.reference_year, "Growth reference year")->capture_default_str();
  map->add_option("--growth-horizon", cfg.growth_horizon, "Years after the reference year")->capture_default_str();
  map->add_option("--quantile-type", cfg.quantile_type, "Hyndman-Fan quantile type 1..9")
      ->check(CLI::Range(1, 9))
      ->capture_default_str();
  map->add_option("--top-terms", cfg.top_terms, "Terms listed per topic")->capture_default_str();
  map->add_option("--salient-terms", cfg.salient_terms, "Corpus-wide salient terms")->capture_default_str();
  map->add_option("--aggregation", cfg.aggregation, "hard (dominant topic) or fractional (theta-weighted)")
      ->check(CLI::IsMember({"hard", "fractional"}))
      ->capture_default_str();

  auto* report = app.add_subcommand("report", "Write CSV tables and SVG plots under out-dir/report");
  report->add_flag("--json,!--no-json", cfg.json, "summary.json")->capture_default_str();
  report->add_flag("--csv,!--no-csv", cfg.csv, "CSV tables")->capture_default_str();
  report->add_flag("--svg,!--no-svg", cfg.svg, "SVG plots")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : slr::pipeline::kExitBadConfig;
  }

  if (show_config) {
    std::cout << app.config_to_str(true, true);
    return 0;
  }
  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return slr::pipeline::kExitBadConfig;
  }

  try {
    cfg.alpha = parse_alpha(alpha);
    slr::pipeline::StageResult result;
    if (ingest->parsed()) {
      result = slr::pipeline::cmd_ingest(cfg);
    } else if (prep->parsed()) {
      result = slr::pipeline::cmd_prep(cfg);
    } else if (select->parsed()) {
      const bool tty = isatty(STDERR_FILENO) != 0;
      result = slr::pipeline::cmd_select_k(cfg, [tty](std::size_t done, std::size_t total) {
        if (tty) {
          std::fprintf(stderr, "\rselect-k: %zu/%zu chains", done, total);
          if (done == total) std::fputc('\n', stderr);
        } else if (done == total || done * 10 / total != (done - 1) * 10 / total) {
          std::fprintf(stderr, "select-k: %zu/%zu chains\n", done, total);
        }
      });
    } else if (fit->parsed()) {
      result = slr::pipeline::cmd_fit(cfg);
    } else if (map->parsed()) {
      result = slr::pipeline::cmd_map(cfg);
    } else if (report->parsed()) {
      result = slr::pipeline::cmd_report(cfg);
    }
    std::cout << result.summary;
    return 0;
  } catch (const slr::Error& e) {
    std::cerr << "slr: " << e.what() << "\n";
    return slr::pipeline::exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "slr: " << e.what() << "\n";
    return slr::pipeline::kExitFailure;
  }
}

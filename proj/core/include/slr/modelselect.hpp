#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slr/lda.hpp"
#include "slr/matrix.hpp"

namespace slr::modelselect {

/// Floor applied inside every logarithm.
inline constexpr double kLogFloor = 1e-12;

enum class Direction { Maximize, Minimize };

enum class Metric : std::size_t { Griffiths2004 = 0, CaoJuan2009 = 1, Arun2010 = 2, Deveaud2014 = 3 };
inline constexpr std::size_t kNumMetrics = 4;
inline constexpr std::array<std::string_view, kNumMetrics> kMetricNames{
    "griffiths2004", "cao2009", "arun2010", "deveaud2014"};
/// Short column prefixes used in reports.
inline constexpr std::array<std::string_view, kNumMetrics> kMetricColumns{
    "griffiths", "cao", "arun", "deveaud"};
inline constexpr std::array<Direction, kNumMetrics> kDirections{
    Direction::Maximize, Direction::Minimize, Direction::Minimize, Direction::Maximize};

enum class ArunVariant { Symmetric, Asymmetric };
enum class GriffithsSamples { BestRun, AllRuns };

/// Harmonic-mean estimate of log p(w | k) from retained log p(w | z) values,
/// evaluated in log space.
double metric_griffiths(std::span<const double> logliks);

/// Mean cosine similarity over unordered pairs of phi rows.
double metric_cao(const Matrix& phi);

/// KL divergence between the normalized singular values of phi and the
/// normalized topic masses lengths * theta (both sorted descending).
/// Throws Error(SvdFailure) if the decomposition fails.
double metric_arun(const Matrix& phi, const Matrix& theta, std::span<const std::uint32_t> lengths,
                   ArunVariant variant = ArunVariant::Symmetric);

/// The divergence step of metric_arun on already-normalized profiles.
double arun_divergence(std::span<const double> c1, std::span<const double> c2,
                       ArunVariant variant = ArunVariant::Symmetric);

/// Mean Jensen-Shannon divergence (natural log) over unordered pairs of phi rows.
double metric_deveaud(const Matrix& phi);

/// Floored KL(p || q) in nats.
double kl_divergence(std::span<const double> p, std::span<const double> q);
double js_divergence(std::span<const double> p, std::span<const double> q);

/// Min-max rescale to [0, 1], flipped for minimize-directed series. NaN
/// entries stay NaN and do not take part; constant series map to 0.5.
std::vector<double> normalize_series(std::span<const double> raw, Direction direction);

struct CandidateScores {
  int k = 0;
  std::array<double, kNumMetrics> raw{};
};

struct MetricSeries {
  std::vector<int> candidates;
  std::array<std::vector<double>, kNumMetrics> raw;
  std::array<std::vector<double>, kNumMetrics> normalized;
  std::vector<double> composite;
  int chosen_k = 0;
  std::vector<std::string> warnings;
};

/// Orders by k, normalizes each metric and fills composite/chosen_k.
MetricSeries assemble_series(std::vector<CandidateScores> scores);

/// Recomputes composite and chosen_k from `normalized` (NaN counts as 0, with
/// a warning); ties go to the smaller k. Returns chosen_k.
int composite_select_k(MetricSeries& series);

struct SelectionOptions {
  ArunVariant arun = ArunVariant::Symmetric;
  GriffithsSamples griffiths = GriffithsSamples::BestRun;
  int jobs = 1;
};

/// Scores one k from its runs (best run chosen by max retained log-likelihood).
CandidateScores score_candidate(std::span<const lda::LdaModel> runs,
                                std::span<const std::uint32_t> lengths,
                                const SelectionOptions& options);

/// Optional per-chain persistence so a grid search can resume.
struct ChainCache {
  std::function<std::optional<lda::LdaModel>(int k, std::uint64_t seed)> load;
  std::function<void(int k, std::uint64_t seed, const lda::LdaModel&)> store;
};

struct SelectionResult {
  MetricSeries series;
  std::vector<lda::RunSummary> runs;  // grid order, then run order
  std::vector<int> run_k;             // k of each entry in runs
};

/// Fits cfg.runs chains for every k in `grid` (cfg.num_topics is overridden)
/// and scores them. Progress callback receives (done, total) after each chain.
SelectionResult select_num_topics(const dtm::DocTermMatrix& dtm, const lda::LdaConfig& cfg,
                                  std::span<const int> grid, const SelectionOptions& options,
                                  const ChainCache& cache = {},
                                  const std::function<void(std::size_t, std::size_t)>& progress = {});

}  // namespace slr::modelselect

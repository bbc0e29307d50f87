#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "slr/corpus.hpp"
#include "slr/dtm.hpp"
#include "slr/lda.hpp"
#include "slr/matrix.hpp"

namespace slr::scimap {

/// Argmax; ties go to the lowest index.
std::size_t dominant_topic(std::span<const double> theta_row);

enum class Aggregation { Hard, Fractional };

struct TopicProfile {
  int topic_id = 0;  // 1-based, as topics are numbered in reports
  std::int64_t paper_count = 0;
  std::int64_t citation_sum = 0;
  double cpp = 0.0;
  std::vector<std::pair<std::string, double>> top_terms;
  std::map<int, corpus::Tally> yearly;
  double growth_pct = 0.0;
  char grid_cell = '?';
  std::map<std::string, std::int64_t> subject_area_bars;
  // theta-weighted counterparts of paper_count / citation_sum
  double fractional_papers = 0.0;
  double fractional_citations = 0.0;
};

/// Axis values for a profile under the chosen aggregation.
double interest(const TopicProfile& p, Aggregation a = Aggregation::Hard);
double impact(const TopicProfile& p, Aggregation a = Aggregation::Hard);

struct ProfileOptions {
  std::size_t top_terms = 5;
};

/// Aggregates corpus metadata per dominant topic. `doc_ids` aligns with the
/// rows of model.theta, `vocabulary` with the columns of model.phi. Throws
/// Error(DomainError) if a modeled id is missing from the corpus.
std::vector<TopicProfile> build_profiles(const lda::LdaModel& model,
                                         std::span<const std::string> doc_ids,
                                         std::span<const std::string> vocabulary,
                                         const corpus::Corpus& corpus,
                                         const ProfileOptions& options = {});

/// Hyndman-Fan sample quantile, types 1-9 (7 is linear interpolation).
double quantile(std::vector<double> values, double p, int type = 7);

struct Boundaries {
  double median = 0.0;
  double q3 = 0.0;
  double p90 = 0.0;
};

Boundaries quantile_boundaries(std::span<const double> values, int type = 7);

/// Cell A-P. Rows run from highest impact (top) to lowest, columns from
/// lowest interest (left) to highest; tiers are closed on the right, so a
/// value equal to a boundary falls in the lower tier.
char grid_classify(double interest, double impact, const Boundaries& interest_bounds,
                   const Boundaries& impact_bounds);

/// Topics strictly above Q3 on both axes.
std::vector<TopicProfile> significant_topics(std::span<const TopicProfile> profiles,
                                             const Boundaries& interest_bounds,
                                             const Boundaries& impact_bounds,
                                             Aggregation a = Aggregation::Hard);

/// 100 (A - B) / max(B, 1), B = papers up to reference_year, A = papers in
/// (reference_year, reference_year + horizon].
double growth_pct(const TopicProfile& profile, int reference_year = 2019, int horizon = 4);

struct EvolutionRow {
  int topic_id = 0;
  int year = 0;
  std::int64_t papers = 0;
  std::int64_t citations = 0;

  bool operator==(const EvolutionRow&) const = default;
};

/// Long-format (topic, year) table, topics in profile order, years ascending.
std::vector<EvolutionRow> evolution_series(std::span<const TopicProfile> profiles);

/// Pearson correlation of theta columns. Zero-variance columns correlate 0
/// with every other column (diagonal stays 1) and add a warning.
Matrix topic_correlation(const Matrix& theta, std::vector<std::string>* warnings = nullptr);

struct Embedding {
  Matrix coords;  // K x 2
  double stress = 0.0;
  bool degenerate = false;
};

/// Classical MDS of Jensen-Shannon distances between phi rows. Each axis is
/// flipped so that its first non-zero loading is positive.
Embedding intertopic_coords(const Matrix& phi);

/// Square root of the JS divergence, natural log.
double js_distance(std::span<const double> p, std::span<const double> q);

/// Top-n terms by corpus frequency, ties lexicographic.
std::vector<std::pair<std::string, std::uint64_t>> salient_terms(const dtm::DocTermMatrix& m,
                                                                 std::size_t n);

struct MapOptions {
  int reference_year = 2019;
  int growth_horizon = 4;
  int quantile_type = 7;
  std::size_t top_terms = 5;
  std::size_t salient_terms = 30;
  Aggregation aggregation = Aggregation::Hard;
};

struct ScienceMap {
  std::vector<TopicProfile> profiles;
  Boundaries interest;
  Boundaries impact;
  Matrix correlation;
  Embedding embedding;
  std::vector<std::pair<std::string, std::uint64_t>> salient;
  std::vector<int> significant;  // topic ids
  std::vector<int> aggregation_disagreements;  // topic ids whose cell differs hard vs fractional
  MapOptions options;
  std::vector<std::string> warnings;
};

ScienceMap build_science_map(const lda::LdaModel& model, const dtm::DocTermMatrix& m,
                             const corpus::Corpus& corpus, const MapOptions& options = {});

}  // namespace slr::scimap

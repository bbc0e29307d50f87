#include "slr/scimap.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "slr/error.hpp"
#include "slr/modelselect.hpp"

namespace slr::scimap {

std::size_t dominant_topic(std::span<const double> theta_row) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < theta_row.size(); ++k) {
    if (theta_row[k] > theta_row[best]) best = k;
  }
  return best;
}

double interest(const TopicProfile& p, Aggregation a) {
  return a == Aggregation::Hard ? static_cast<double>(p.paper_count) : p.fractional_papers;
}

double impact(const TopicProfile& p, Aggregation a) {
  return a == Aggregation::Hard ? static_cast<double>(p.citation_sum) : p.fractional_citations;
}

std::vector<TopicProfile> build_profiles(const lda::LdaModel& model,
                                         std::span<const std::string> doc_ids,
                                         std::span<const std::string> vocabulary,
                                         const corpus::Corpus& corpus,
                                         const ProfileOptions& options) {
  const std::size_t K = model.phi.rows();
  if (model.theta.rows() != doc_ids.size() || model.phi.cols() != vocabulary.size()) {
    throw Error(ErrorKind::DomainError, "model shape does not match doc ids / vocabulary");
  }
  std::unordered_map<std::string_view, const corpus::Document*> by_id;
  for (const auto& d : corpus.documents) by_id.emplace(d.id, &d);

  std::vector<TopicProfile> profiles(K);
  for (std::size_t k = 0; k < K; ++k) profiles[k].topic_id = static_cast<int>(k + 1);

  for (std::size_t row = 0; row < doc_ids.size(); ++row) {
    auto it = by_id.find(doc_ids[row]);
    if (it == by_id.end()) {
      throw Error(ErrorKind::DomainError, "modeled document " + doc_ids[row] + " not in corpus");
    }
    const corpus::Document& doc = *it->second;
    const auto theta_row = model.theta.row(row);
    auto& p = profiles[dominant_topic(theta_row)];
    ++p.paper_count;
    p.citation_sum += doc.citations;
    if (doc.year) {
      auto& y = p.yearly[*doc.year];
      ++y.papers;
      y.citations += doc.citations;
    }
    for (const auto& area : doc.subject_areas) ++p.subject_area_bars[area];
    for (std::size_t k = 0; k < K; ++k) {
      profiles[k].fractional_papers += theta_row[k];
      profiles[k].fractional_citations += theta_row[k] * static_cast<double>(doc.citations);
    }
  }

  for (std::size_t k = 0; k < K; ++k) {
    auto& p = profiles[k];
    p.cpp = static_cast<double>(p.citation_sum) / static_cast<double>(std::max<std::int64_t>(p.paper_count, 1));
    std::vector<std::size_t> order(vocabulary.size());
    std::iota(order.begin(), order.end(), 0);
    const auto phi_row = model.phi.row(k);
    const std::size_t n = std::min(options.top_terms, order.size());
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n), order.end(),
                      [&](std::size_t a, std::size_t b) {
                        return phi_row[a] != phi_row[b] ? phi_row[a] > phi_row[b] : a < b;
                      });
    for (std::size_t i = 0; i < n; ++i) p.top_terms.emplace_back(vocabulary[order[i]], phi_row[order[i]]);
  }
  return profiles;
}

double quantile(std::vector<double> values, double p, int type) {
  if (values.empty()) throw Error(ErrorKind::DomainError, "quantile of empty sequence");
  if (type < 1 || type > 9) throw Error(ErrorKind::BadConfig, "quantile type must be 1..9");
  std::sort(values.begin(), values.end());
  const auto n = static_cast<double>(values.size());
  // 1-based order statistic with clamping at both ends
  auto x = [&](double j) {
    const double clamped = std::clamp(j, 1.0, n);
    return values[static_cast<std::size_t>(clamped) - 1];
  };
  constexpr double fuzz = 4 * std::numeric_limits<double>::epsilon();

  if (type <= 3) {
    const double m = type == 3 ? -0.5 : 0.0;
    const double np = n * p + m;
    const double j = std::floor(np + fuzz);
    const double g = np - j;
    const bool g_zero = std::abs(g) <= fuzz;
    if (type == 1) return g_zero ? x(j) : x(j + 1);
    if (type == 2) return g_zero ? 0.5 * (x(j) + x(j + 1)) : x(j + 1);
    return (g_zero && std::fmod(j, 2.0) == 0.0) ? x(j) : x(j + 1);
  }

  double a = 0.0, b = 0.0;  // plotting positions (p - a) / (n + 1 - a - b)
  switch (type) {
    case 4: a = 0.0; b = 1.0; break;
    case 5: a = 0.5; b = 0.5; break;
    case 6: a = 0.0; b = 0.0; break;
    case 7: a = 1.0; b = 1.0; break;
    case 8: a = 1.0 / 3.0; b = 1.0 / 3.0; break;
    case 9: a = 3.0 / 8.0; b = 3.0 / 8.0; break;
  }
  const double m = a + p * (1.0 - a - b);
  const double np = n * p + m;
  double j = std::floor(np + fuzz);
  double g = np - j;
  if (std::abs(g) < fuzz) g = 0.0;
  return (1.0 - g) * x(j) + g * x(j + 1);
}

Boundaries quantile_boundaries(std::span<const double> values, int type) {
  std::vector<double> v(values.begin(), values.end());
  return {quantile(v, 0.5, type), quantile(v, 0.75, type), quantile(v, 0.9, type)};
}

namespace {

int tier(double value, const Boundaries& b) {
  if (value > b.p90) return 3;
  if (value > b.q3) return 2;
  if (value > b.median) return 1;
  return 0;
}

}  // namespace

char grid_classify(double interest_value, double impact_value, const Boundaries& interest_bounds,
                   const Boundaries& impact_bounds) {
  const int col = tier(interest_value, interest_bounds);
  const int row = 3 - tier(impact_value, impact_bounds);
  return static_cast<char>('A' + row * 4 + col);
}

std::vector<TopicProfile> significant_topics(std::span<const TopicProfile> profiles,
                                             const Boundaries& interest_bounds,
                                             const Boundaries& impact_bounds, Aggregation a) {
  std::vector<TopicProfile> out;
  for (const auto& p : profiles) {
    if (interest(p, a) > interest_bounds.q3 && impact(p, a) > impact_bounds.q3) out.push_back(p);
  }
  return out;
}

double growth_pct(const TopicProfile& profile, int reference_year, int horizon) {
  std::int64_t before = 0, after = 0;
  for (const auto& [year, t] : profile.yearly) {
    if (year <= reference_year) {
      before += t.papers;
    } else if (year <= reference_year + horizon) {
      after += t.papers;
    }
  }
  return 100.0 * static_cast<double>(after - before) /
         static_cast<double>(std::max<std::int64_t>(before, 1));
}

std::vector<EvolutionRow> evolution_series(std::span<const TopicProfile> profiles) {
  std::vector<EvolutionRow> rows;
  for (const auto& p : profiles) {
    for (const auto& [year, t] : p.yearly) rows.push_back({p.topic_id, year, t.papers, t.citations});
  }
  return rows;
}

Matrix topic_correlation(const Matrix& theta, std::vector<std::string>* warnings) {
  const std::size_t D = theta.rows();
  const std::size_t K = theta.cols();
  if (D < 2) throw Error(ErrorKind::DomainError, "correlation needs at least two documents");

  // Extended precision keeps exact linear relations (e.g. complementary
  // columns) at exactly +-1 after rounding back to double.
  std::vector<long double> mean(K, 0.0L);
  for (std::size_t d = 0; d < D; ++d) {
    for (std::size_t k = 0; k < K; ++k) mean[k] += theta(d, k);
  }
  for (auto& m : mean) m /= static_cast<long double>(D);

  std::vector<long double> cross(K * K, 0.0L);
  for (std::size_t d = 0; d < D; ++d) {
    for (std::size_t i = 0; i < K; ++i) {
      const long double di = theta(d, i) - mean[i];
      for (std::size_t j = i; j < K; ++j) cross[i * K + j] += di * (theta(d, j) - mean[j]);
    }
  }

  Matrix r(K, K, 0.0);
  for (std::size_t i = 0; i < K; ++i) {
    r(i, i) = 1.0;
    if (cross[i * K + i] == 0.0L && warnings) {
      warnings->push_back("topic " + std::to_string(i + 1) +
                          " has zero theta variance; its correlations are set to 0");
    }
    for (std::size_t j = i + 1; j < K; ++j) {
      const long double vi = cross[i * K + i];
      const long double vj = cross[j * K + j];
      double value = 0.0;
      if (vi > 0.0L && vj > 0.0L) {
        value = static_cast<double>(cross[i * K + j] / std::sqrt(vi * vj));
        value = std::clamp(value, -1.0, 1.0);
      }
      r(i, j) = value;
      r(j, i) = value;
    }
  }
  return r;
}

double js_distance(std::span<const double> p, std::span<const double> q) {
  return std::sqrt(std::max(0.0, modelselect::js_divergence(p, q)));
}

Embedding intertopic_coords(const Matrix& phi) {
  const std::size_t K = phi.rows();
  if (K < 2) throw Error(ErrorKind::DomainError, "intertopic map needs K >= 2");
  Embedding out;
  out.coords = Matrix(K, 2, 0.0);

  Eigen::MatrixXd dist(K, K);
  double total = 0.0;
  for (std::size_t i = 0; i < K; ++i) {
    dist(i, i) = 0.0;
    for (std::size_t j = i + 1; j < K; ++j) {
      const double d = js_distance(phi.row(i), phi.row(j));
      dist(i, j) = dist(j, i) = d;
      total += d;
    }
  }
  if (total == 0.0) {
    out.degenerate = true;
    return out;
  }

  const Eigen::MatrixXd sq = dist.array().square().matrix();
  const Eigen::MatrixXd centering =
      Eigen::MatrixXd::Identity(K, K) - Eigen::MatrixXd::Constant(K, K, 1.0 / static_cast<double>(K));
  const Eigen::MatrixXd b = -0.5 * centering * sq * centering;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(b);
  if (eig.info() != Eigen::Success) throw Error(ErrorKind::NumericalError, "eigensolver failed");

  // eigenvalues ascending; take the two largest. Eigenvalues that are zero up
  // to rounding give a zero axis rather than noise.
  const auto n = static_cast<Eigen::Index>(K);
  const double lambda_max = eig.eigenvalues()[n - 1];
  for (int axis = 0; axis < 2; ++axis) {
    const Eigen::Index idx = n - 1 - axis;
    if (idx < 0) break;
    const double lambda = eig.eigenvalues()[idx];
    if (!(lambda > 1e-12 * lambda_max)) continue;
    Eigen::VectorXd v = eig.eigenvectors().col(idx) * std::sqrt(lambda);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (std::abs(v[i]) > 1e-12) {
        if (v[i] < 0) v = -v;
        break;
      }
    }
    for (std::size_t i = 0; i < K; ++i) out.coords(i, axis) = v[static_cast<Eigen::Index>(i)];
  }

  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < K; ++i) {
    for (std::size_t j = i + 1; j < K; ++j) {
      const double dx = out.coords(i, 0) - out.coords(j, 0);
      const double dy = out.coords(i, 1) - out.coords(j, 1);
      const double diff = std::sqrt(dx * dx + dy * dy) - dist(i, j);
      num += diff * diff;
      den += dist(i, j) * dist(i, j);
    }
  }
  out.stress = num / den;
  return out;
}

std::vector<std::pair<std::string, std::uint64_t>> salient_terms(const dtm::DocTermMatrix& m,
                                                                 std::size_t n) {
  const auto freq = dtm::term_frequencies(m);
  std::vector<std::pair<std::string, std::uint64_t>> all;
  all.reserve(freq.size());
  for (std::size_t v = 0; v < freq.size(); ++v) all.emplace_back(m.vocabulary[v], freq[v]);
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  if (all.size() > n) all.resize(n);
  return all;
}

ScienceMap build_science_map(const lda::LdaModel& model, const dtm::DocTermMatrix& m,
                             const corpus::Corpus& corpus, const MapOptions& options) {
  ScienceMap map;
  map.options = options;
  map.profiles = build_profiles(model, m.doc_ids, m.vocabulary, corpus, {options.top_terms});
  for (auto& p : map.profiles) p.growth_pct = growth_pct(p, options.reference_year, options.growth_horizon);

  auto axis_bounds = [&](Aggregation a, Boundaries& bi, Boundaries& bp) {
    std::vector<double> xs, ys;
    for (const auto& p : map.profiles) {
      xs.push_back(interest(p, a));
      ys.push_back(impact(p, a));
    }
    bi = quantile_boundaries(xs, options.quantile_type);
    bp = quantile_boundaries(ys, options.quantile_type);
  };
  axis_bounds(options.aggregation, map.interest, map.impact);
  for (auto& p : map.profiles) {
    p.grid_cell = grid_classify(interest(p, options.aggregation), impact(p, options.aggregation),
                                map.interest, map.impact);
  }
  for (const auto& p : significant_topics(map.profiles, map.interest, map.impact, options.aggregation)) {
    map.significant.push_back(p.topic_id);
  }

  const Aggregation other =
      options.aggregation == Aggregation::Hard ? Aggregation::Fractional : Aggregation::Hard;
  Boundaries oi, op;
  axis_bounds(other, oi, op);
  for (const auto& p : map.profiles) {
    if (grid_classify(interest(p, other), impact(p, other), oi, op) != p.grid_cell) {
      map.aggregation_disagreements.push_back(p.topic_id);
    }
  }

  if (model.theta.rows() >= 2) {
    map.correlation = topic_correlation(model.theta, &map.warnings);
  } else {
    map.correlation = Matrix(model.theta.cols(), model.theta.cols(), 0.0);
    for (std::size_t k = 0; k < model.theta.cols(); ++k) map.correlation(k, k) = 1.0;
    map.warnings.push_back("fewer than two documents; correlation left as identity");
  }
  map.embedding = intertopic_coords(model.phi);
  if (map.embedding.degenerate) map.warnings.push_back("all intertopic distances are zero");
  map.salient = salient_terms(m, options.salient_terms);
  return map;
}

}  // namespace slr::scimap

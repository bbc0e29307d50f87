#include "slr/modelselect.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>

#include "slr/error.hpp"
#include "slr/parallel.hpp"

namespace slr::modelselect {

namespace {

double flog(double x) { return std::log(std::max(x, kLogFloor)); }

double cosine(std::span<const double> a, std::span<const double> b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

template <typename PairFn>
double mean_over_pairs(const Matrix& phi, PairFn&& fn) {
  const std::size_t K = phi.rows();
  if (K < 2) throw Error(ErrorKind::DomainError, "pairwise topic metrics need K >= 2");
  double sum = 0.0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < K; ++i) {
    for (std::size_t j = i + 1; j < K; ++j) {
      sum += fn(phi.row(i), phi.row(j));
      ++pairs;
    }
  }
  return sum / static_cast<double>(pairs);
}

std::vector<double> normalized_desc(std::vector<double> v) {
  const double total = std::accumulate(v.begin(), v.end(), 0.0);
  if (total > 0.0) {
    for (auto& x : v) x /= total;
  }
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

}  // namespace

double metric_griffiths(std::span<const double> logliks) {
  if (logliks.empty()) throw Error(ErrorKind::DomainError, "need at least one retained sample");
  double max_neg = -std::numeric_limits<double>::infinity();
  for (double l : logliks) max_neg = std::max(max_neg, -l);
  double acc = 0.0;
  for (double l : logliks) acc += std::exp(-l - max_neg);
  const double lse = max_neg + std::log(acc);
  return std::log(static_cast<double>(logliks.size())) - lse;
}

double metric_cao(const Matrix& phi) { return mean_over_pairs(phi, cosine); }

double kl_divergence(std::span<const double> p, std::span<const double> q) {
  double kl = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) kl += p[i] * (flog(p[i]) - flog(q[i]));
  }
  return kl;
}

double js_divergence(std::span<const double> p, std::span<const double> q) {
  std::vector<double> m(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m[i] = 0.5 * (p[i] + q[i]);
  return 0.5 * kl_divergence(p, m) + 0.5 * kl_divergence(q, m);
}

double metric_deveaud(const Matrix& phi) { return mean_over_pairs(phi, js_divergence); }

double arun_divergence(std::span<const double> c1, std::span<const double> c2,
                       ArunVariant variant) {
  const double forward = kl_divergence(c1, c2);
  if (variant == ArunVariant::Asymmetric) return forward;
  return forward + kl_divergence(c2, c1);
}

double metric_arun(const Matrix& phi, const Matrix& theta, std::span<const std::uint32_t> lengths,
                   ArunVariant variant) {
  const std::size_t K = phi.rows();
  if (theta.cols() != K || theta.rows() != lengths.size()) {
    throw Error(ErrorKind::DomainError, "phi, theta and lengths disagree in shape");
  }
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
      phi.data().data(), static_cast<Eigen::Index>(K), static_cast<Eigen::Index>(phi.cols()));
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
  if (svd.info() != Eigen::Success) throw Error(ErrorKind::SvdFailure, "SVD did not converge");
  const Eigen::VectorXd& sv = svd.singularValues();

  std::vector<double> singular(K, 0.0);
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (!std::isfinite(sv[i])) throw Error(ErrorKind::SvdFailure, "non-finite singular value");
    singular[static_cast<std::size_t>(i)] = sv[i];
  }
  std::vector<double> mass(K, 0.0);
  for (std::size_t d = 0; d < theta.rows(); ++d) {
    for (std::size_t k = 0; k < K; ++k) mass[k] += lengths[d] * theta(d, k);
  }
  const auto c1 = normalized_desc(std::move(singular));
  const auto c2 = normalized_desc(std::move(mass));
  return arun_divergence(c1, c2, variant);
}

std::vector<double> normalize_series(std::span<const double> raw, Direction direction) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (double x : raw) {
    if (std::isnan(x)) continue;
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  std::vector<double> out(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const double x = raw[i];
    if (std::isnan(x)) {
      out[i] = x;
    } else if (hi == lo) {
      out[i] = 0.5;
    } else {
      const double scaled = (x - lo) / (hi - lo);
      out[i] = direction == Direction::Maximize ? scaled : 1.0 - scaled;
    }
  }
  return out;
}

int composite_select_k(MetricSeries& series) {
  const std::size_t n = series.candidates.size();
  series.composite.assign(n, 0.0);
  for (std::size_t m = 0; m < kNumMetrics; ++m) {
    for (std::size_t i = 0; i < n; ++i) {
      const double v = series.normalized[m][i];
      if (std::isnan(v)) {
        series.warnings.push_back(std::string(kMetricNames[m]) + " is NaN at k=" +
                                  std::to_string(series.candidates[i]) + "; counted as 0");
        continue;
      }
      series.composite[i] += v;
    }
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (series.composite[i] > series.composite[best]) best = i;
  }
  series.chosen_k = n == 0 ? 0 : series.candidates[best];
  return series.chosen_k;
}

MetricSeries assemble_series(std::vector<CandidateScores> scores) {
  std::sort(scores.begin(), scores.end(), [](const auto& a, const auto& b) { return a.k < b.k; });
  MetricSeries series;
  for (const auto& s : scores) {
    series.candidates.push_back(s.k);
    for (std::size_t m = 0; m < kNumMetrics; ++m) series.raw[m].push_back(s.raw[m]);
  }
  for (std::size_t m = 0; m < kNumMetrics; ++m) {
    series.normalized[m] = normalize_series(series.raw[m], kDirections[m]);
  }
  composite_select_k(series);
  return series;
}

CandidateScores score_candidate(std::span<const lda::LdaModel> runs,
                                std::span<const std::uint32_t> lengths,
                                const SelectionOptions& options) {
  if (runs.empty()) throw Error(ErrorKind::DomainError, "no runs to score");
  const auto& best = runs[lda::select_best(runs)];
  CandidateScores s;
  s.k = best.config.num_topics;

  std::vector<double> samples;
  if (options.griffiths == GriffithsSamples::AllRuns) {
    for (const auto& r : runs) samples.insert(samples.end(), r.loglik_trace.begin(), r.loglik_trace.end());
  } else {
    samples = best.loglik_trace;
  }
  s.raw[static_cast<std::size_t>(Metric::Griffiths2004)] = metric_griffiths(samples);
  s.raw[static_cast<std::size_t>(Metric::CaoJuan2009)] = metric_cao(best.phi);
  try {
    s.raw[static_cast<std::size_t>(Metric::Arun2010)] =
        metric_arun(best.phi, best.theta, lengths, options.arun);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SvdFailure) throw;
    s.raw[static_cast<std::size_t>(Metric::Arun2010)] = std::numeric_limits<double>::quiet_NaN();
  }
  s.raw[static_cast<std::size_t>(Metric::Deveaud2014)] = metric_deveaud(best.phi);
  return s;
}

SelectionResult select_num_topics(const dtm::DocTermMatrix& dtm, const lda::LdaConfig& cfg,
                                  std::span<const int> grid, const SelectionOptions& options,
                                  const ChainCache& cache,
                                  const std::function<void(std::size_t, std::size_t)>& progress) {
  struct Task {
    std::size_t grid_index;
    std::size_t run;
  };
  std::vector<lda::LdaConfig> configs;
  std::vector<Task> tasks;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    lda::LdaConfig c = cfg;
    c.num_topics = grid[g];
    c.validate();
    configs.push_back(std::move(c));
    for (int r = 0; r < cfg.runs; ++r) tasks.push_back({g, static_cast<std::size_t>(r)});
  }

  std::vector<std::vector<lda::LdaModel>> models(grid.size(),
                                                 std::vector<lda::LdaModel>(cfg.runs));
  std::atomic<std::size_t> done{0};
  std::mutex progress_mutex;
  parallel_for(tasks.size(), options.jobs, [&](std::size_t t) {
    const auto [g, r] = tasks[t];
    const auto& c = configs[g];
    const std::uint64_t seed = c.seeds[r];
    std::optional<lda::LdaModel> cached;
    if (cache.load) cached = cache.load(c.num_topics, seed);
    if (cached && cached->config == c && cached->seed_used == seed) {
      models[g][r] = std::move(*cached);
    } else {
      models[g][r] = lda::run_chain(dtm, c, seed);
      if (cache.store) cache.store(c.num_topics, seed, models[g][r]);
    }
    const std::size_t n = ++done;
    if (progress) {
      std::lock_guard lock(progress_mutex);
      progress(n, tasks.size());
    }
  });

  SelectionResult result;
  std::vector<CandidateScores> scores(grid.size());
  parallel_for(grid.size(), options.jobs, [&](std::size_t g) {
    scores[g] = score_candidate(models[g], dtm.lengths, options);
  });
  for (std::size_t g = 0; g < grid.size(); ++g) {
    for (const auto& m : models[g]) {
      result.runs.push_back({m.seed_used, m.loglik_trace, m.max_loglik()});
      result.run_k.push_back(grid[g]);
    }
  }
  result.series = assemble_series(std::move(scores));
  return result;
}

}  // namespace slr::modelselect

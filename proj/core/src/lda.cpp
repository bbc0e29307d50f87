#include "slr/lda.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "slr/error.hpp"
#include "slr/parallel.hpp"

namespace slr::lda {

double dirichlet_log_density(std::span<const double> x, std::span<const double> alpha) {
  if (x.size() != alpha.size() || x.empty()) {
    throw Error(ErrorKind::DomainError, "x and alpha must have the same non-zero length");
  }
  double sum_x = 0.0;
  for (double xi : x) {
    if (!(xi >= 0.0)) throw Error(ErrorKind::DomainError, "x has a negative component");
    sum_x += xi;
  }
  if (std::abs(sum_x - 1.0) > 1e-9) throw Error(ErrorKind::DomainError, "x is not on the simplex");

  double sum_alpha = 0.0;
  double log_norm = 0.0;
  double kernel = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double a = alpha[i];
    if (!(a > 0.0)) throw Error(ErrorKind::DomainError, "alpha must be positive");
    sum_alpha += a;
    log_norm -= std::lgamma(a);
    if (a == 1.0) continue;
    if (x[i] == 0.0) {
      throw Error(ErrorKind::DomainError, "zero component with alpha != 1");
    }
    kernel += (a - 1.0) * std::log(x[i]);
  }
  return std::lgamma(sum_alpha) + log_norm + kernel;
}

void LdaConfig::validate() const {
  if (num_topics < 2) throw Error(ErrorKind::BadConfig, "number of topics must be >= 2");
  if (!(effective_alpha() > 0.0)) throw Error(ErrorKind::BadConfig, "alpha must be > 0");
  if (!(beta > 0.0)) throw Error(ErrorKind::BadConfig, "beta must be > 0");
  if (thin < 1) throw Error(ErrorKind::BadConfig, "thin must be >= 1");
  if (iterations < thin) throw Error(ErrorKind::BadConfig, "iterations must be >= thin");
  if (runs < 1) throw Error(ErrorKind::BadConfig, "runs must be >= 1");
  if (seeds.size() < static_cast<std::size_t>(runs)) {
    throw Error(ErrorKind::BadConfig, "seed list shorter than the number of runs");
  }
}

namespace {

GibbsState empty_state(const dtm::DocTermMatrix& dtm, int num_topics, std::uint64_t seed) {
  GibbsState s;
  s.num_topics = num_topics;
  s.num_terms = dtm.num_terms();
  s.rng = Rng(seed);
  s.doc_offsets.reserve(dtm.num_docs() + 1);
  s.doc_offsets.push_back(0);
  for (const auto& row : dtm.rows) {
    for (const auto& e : row) s.words.insert(s.words.end(), e.count, e.term);
    s.doc_offsets.push_back(s.words.size());
  }
  s.n_dk.assign(dtm.num_docs() * num_topics, 0);
  s.n_wk.assign(s.num_terms * num_topics, 0);
  s.n_k.assign(num_topics, 0);
  return s;
}

void add_counts(GibbsState& s) {
  const int K = s.num_topics;
  for (std::size_t d = 0; d + 1 < s.doc_offsets.size(); ++d) {
    for (std::size_t i = s.doc_offsets[d]; i < s.doc_offsets[d + 1]; ++i) {
      const auto k = s.z[i];
      ++s.n_dk[d * K + k];
      ++s.n_wk[s.words[i] * K + k];
      ++s.n_k[k];
    }
  }
}

void normalize_rows(Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    const double total = std::accumulate(row.begin(), row.end(), 0.0);
    for (auto& x : row) x /= total;
  }
}

}  // namespace

GibbsState gibbs_init(const dtm::DocTermMatrix& dtm, const LdaConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  GibbsState s = empty_state(dtm, cfg.num_topics, seed);
  s.z.resize(s.words.size());
  for (auto& zi : s.z) zi = static_cast<std::int32_t>(s.rng.below(cfg.num_topics));
  add_counts(s);
  return s;
}

GibbsState state_from_assignments(const dtm::DocTermMatrix& dtm, int num_topics,
                                  std::vector<std::int32_t> z, std::uint64_t seed) {
  GibbsState s = empty_state(dtm, num_topics, seed);
  if (z.size() != s.words.size()) {
    throw Error(ErrorKind::DomainError, "assignment vector length differs from token count");
  }
  for (auto zi : z) {
    if (zi < 0 || zi >= num_topics) throw Error(ErrorKind::DomainError, "topic out of range");
  }
  s.z = std::move(z);
  add_counts(s);
  return s;
}

void gibbs_sweep(GibbsState& s, double alpha, double beta) {
  const int K = s.num_topics;
  const double v_beta = static_cast<double>(s.num_terms) * beta;
  std::vector<double> cumulative(K);
  // 1 / (n_k + V beta), refreshed only for the two topics a token moves between
  std::vector<double> inv_denom(K);
  for (int t = 0; t < K; ++t) inv_denom[t] = 1.0 / (static_cast<double>(s.n_k[t]) + v_beta);
  for (std::size_t d = 0; d + 1 < s.doc_offsets.size(); ++d) {
    std::int32_t* doc = &s.n_dk[d * K];
    for (std::size_t i = s.doc_offsets[d]; i < s.doc_offsets[d + 1]; ++i) {
      std::int32_t* word = &s.n_wk[static_cast<std::size_t>(s.words[i]) * K];
      int k = s.z[i];
      --doc[k];
      --word[k];
      --s.n_k[k];
      inv_denom[k] = 1.0 / (static_cast<double>(s.n_k[k]) + v_beta);

      double total = 0.0;
      for (int t = 0; t < K; ++t) {
        total += (doc[t] + alpha) * (word[t] + beta) * inv_denom[t];
        cumulative[t] = total;
      }
      if (!(total > 0.0) || !std::isfinite(total)) {
        throw Error(ErrorKind::NumericalError, "conditional distribution has no positive mass");
      }
      const double u = s.rng.uniform() * total;
      k = K - 1;
      for (int t = 0; t < K; ++t) {
        if (u < cumulative[t]) {
          k = t;
          break;
        }
      }

      s.z[i] = k;
      ++doc[k];
      ++word[k];
      ++s.n_k[k];
      inv_denom[k] = 1.0 / (static_cast<double>(s.n_k[k]) + v_beta);
    }
  }
}

double corpus_log_likelihood(const GibbsState& s, double beta) {
  if (s.words.empty()) return 0.0;
  const int K = s.num_topics;
  const double v_beta = static_cast<double>(s.num_terms) * beta;
  const double lg_beta = std::lgamma(beta);
  double ll = 0.0;
  // Zero counts contribute lgamma(beta) - lgamma(beta) and are skipped.
  for (std::size_t v = 0; v < s.num_terms; ++v) {
    for (int k = 0; k < K; ++k) {
      const auto n = s.n_wk[v * K + k];
      if (n > 0) ll += std::lgamma(n + beta) - lg_beta;
    }
  }
  for (int k = 0; k < K; ++k) ll += std::lgamma(v_beta) - std::lgamma(s.n_k[k] + v_beta);
  return ll;
}

Matrix estimate_phi(const GibbsState& s, double beta) {
  const int K = s.num_topics;
  const double v_beta = static_cast<double>(s.num_terms) * beta;
  Matrix phi(K, s.num_terms);
  for (int k = 0; k < K; ++k) {
    const double denom = static_cast<double>(s.n_k[k]) + v_beta;
    for (std::size_t v = 0; v < s.num_terms; ++v) phi(k, v) = (s.topic_term(k, v) + beta) / denom;
  }
  return phi;
}

Matrix estimate_theta(const GibbsState& s, double alpha) {
  const int K = s.num_topics;
  const std::size_t D = s.num_docs();
  Matrix theta(D, K);
  for (std::size_t d = 0; d < D; ++d) {
    const double n_d = static_cast<double>(s.doc_offsets[d + 1] - s.doc_offsets[d]);
    const double denom = n_d + K * alpha;
    for (int k = 0; k < K; ++k) theta(d, k) = (s.doc_topic(d, k) + alpha) / denom;
  }
  return theta;
}

bool counts_consistent(const GibbsState& s) {
  GibbsState fresh = s;
  std::fill(fresh.n_dk.begin(), fresh.n_dk.end(), 0);
  std::fill(fresh.n_wk.begin(), fresh.n_wk.end(), 0);
  std::fill(fresh.n_k.begin(), fresh.n_k.end(), 0);
  add_counts(fresh);
  return fresh.n_dk == s.n_dk && fresh.n_wk == s.n_wk && fresh.n_k == s.n_k;
}

double LdaModel::max_loglik() const {
  return loglik_trace.empty() ? -INFINITY
                              : *std::max_element(loglik_trace.begin(), loglik_trace.end());
}

LdaModel run_chain(const dtm::DocTermMatrix& dtm, const LdaConfig& cfg, std::uint64_t seed,
                   const SweepObserver& observer) {
  GibbsState state = gibbs_init(dtm, cfg, seed);
  const double alpha = cfg.effective_alpha();

  LdaModel model;
  model.config = cfg;
  model.seed_used = seed;
  model.phi = Matrix(cfg.num_topics, dtm.num_terms());
  model.theta = Matrix(dtm.num_docs(), cfg.num_topics);

  for (int sweep = 1; sweep <= cfg.iterations; ++sweep) {
    gibbs_sweep(state, alpha, cfg.beta);
    if (observer) observer(sweep, state);
    if (sweep % cfg.thin != 0) continue;

    model.loglik_trace.push_back(corpus_log_likelihood(state, cfg.beta));
    ++model.retained_samples;
    const bool keep = cfg.posterior == Posterior::Mean || sweep + cfg.thin > cfg.iterations;
    if (!keep) continue;
    Matrix phi = estimate_phi(state, cfg.beta);
    Matrix theta = estimate_theta(state, alpha);
    if (cfg.posterior == Posterior::Last) {
      model.phi = std::move(phi);
      model.theta = std::move(theta);
      continue;
    }
    std::transform(model.phi.data().begin(), model.phi.data().end(), phi.data().begin(),
                   model.phi.data().begin(), std::plus<>());
    std::transform(model.theta.data().begin(), model.theta.data().end(), theta.data().begin(),
                   model.theta.data().begin(), std::plus<>());
  }
  if (cfg.posterior == Posterior::Mean) {
    const double n = model.retained_samples;
    for (auto& x : model.phi.data()) x /= n;
    for (auto& x : model.theta.data()) x /= n;
    normalize_rows(model.phi);
    normalize_rows(model.theta);
  }
  return model;
}

std::size_t select_best(std::span<const LdaModel> models) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < models.size(); ++i) {
    if (models[i].max_loglik() > models[best].max_loglik()) best = i;
  }
  return best;
}

FitResult fit_best_of_runs(const dtm::DocTermMatrix& dtm, const LdaConfig& cfg, int jobs) {
  cfg.validate();
  std::vector<LdaModel> models(cfg.runs);
  parallel_for(models.size(), jobs,
               [&](std::size_t i) { models[i] = run_chain(dtm, cfg, cfg.seeds[i]); });
  FitResult result;
  for (const auto& m : models) {
    result.runs.push_back({m.seed_used, m.loglik_trace, m.max_loglik()});
  }
  result.best_index = select_best(models);
  result.best = std::move(models[result.best_index]);
  return result;
}

}  // namespace slr::lda

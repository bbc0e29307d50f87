#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "slr/dtm.hpp"
#include "slr/matrix.hpp"
#include "slr/random.hpp"

namespace slr::lda {

/// Log of the Dirichlet density at `x`. Throws Error(DomainError) on size
/// mismatch, off-simplex input, non-positive alpha, or a zero component
/// whose alpha differs from 1.
double dirichlet_log_density(std::span<const double> x, std::span<const double> alpha);

enum class Posterior { Mean, Last };

struct LdaConfig {
  int num_topics = 10;
  std::optional<double> alpha;  // symmetric, per component; defaults to 50 / K
  double beta = 0.1;
  int iterations = 2000;
  int thin = 200;
  int runs = 5;
  std::vector<std::uint64_t> seeds{7413, 32, 23935, 8461, 279};
  Posterior posterior = Posterior::Mean;

  double effective_alpha() const { return alpha.value_or(50.0 / num_topics); }
  int retained_samples() const { return iterations / thin; }

  /// Throws Error(BadConfig) when an invariant is violated.
  void validate() const;

  bool operator==(const LdaConfig&) const = default;
};

/// Collapsed Gibbs state. Tokens are laid out document by document, and
/// within a document in sparse-row order (each term repeated by its count).
struct GibbsState {
  int num_topics = 0;
  std::size_t num_terms = 0;
  std::vector<std::uint32_t> words;        // term index per token
  std::vector<std::size_t> doc_offsets;    // size D + 1
  std::vector<std::int32_t> z;             // topic per token
  std::vector<std::int32_t> n_dk;          // D x K
  std::vector<std::int32_t> n_wk;          // V x K, term-major
  std::vector<std::int64_t> n_k;           // K
  Rng rng;

  std::size_t num_docs() const { return doc_offsets.empty() ? 0 : doc_offsets.size() - 1; }
  std::int32_t doc_topic(std::size_t d, int k) const { return n_dk[d * num_topics + k]; }
  std::int32_t topic_term(int k, std::size_t v) const { return n_wk[v * num_topics + k]; }

  bool operator==(const GibbsState&) const = default;
};

/// Uniform random initial assignment from a generator seeded with `seed`.
GibbsState gibbs_init(const dtm::DocTermMatrix& dtm, const LdaConfig& cfg, std::uint64_t seed);

/// Builds a state from explicit assignments (tests and enumeration).
GibbsState state_from_assignments(const dtm::DocTermMatrix& dtm, int num_topics,
                                  std::vector<std::int32_t> z, std::uint64_t seed = 0);

/// One sweep over all tokens in layout order. Throws Error(NumericalError)
/// if a conditional has no positive mass.
void gibbs_sweep(GibbsState& s, double alpha, double beta);
inline void gibbs_sweep(GibbsState& s, const LdaConfig& cfg) {
  gibbs_sweep(s, cfg.effective_alpha(), cfg.beta);
}

/// log p(w | z) with phi integrated out; 0 for a state without tokens.
double corpus_log_likelihood(const GibbsState& s, double beta);

/// (n_kv + beta) / (n_k + V beta), K x V.
Matrix estimate_phi(const GibbsState& s, double beta);

/// (n_dk + alpha) / (N_d + K alpha), D x K.
Matrix estimate_theta(const GibbsState& s, double alpha);

/// True when all count tables agree with z exactly.
bool counts_consistent(const GibbsState& s);

struct LdaModel {
  Matrix phi;
  Matrix theta;
  std::vector<double> loglik_trace;
  int retained_samples = 0;
  LdaConfig config;
  std::uint64_t seed_used = 0;

  double max_loglik() const;
  bool operator==(const LdaModel&) const = default;
};

/// Called after every sweep with the 1-based sweep number.
using SweepObserver = std::function<void(int sweep, const GibbsState&)>;

LdaModel run_chain(const dtm::DocTermMatrix& dtm, const LdaConfig& cfg, std::uint64_t seed,
                   const SweepObserver& observer = {});

struct RunSummary {
  std::uint64_t seed = 0;
  std::vector<double> loglik_trace;
  double max_loglik = 0.0;
};

struct FitResult {
  LdaModel best;
  std::size_t best_index = 0;
  std::vector<RunSummary> runs;
};

/// Index of the model with the greatest max retained log-likelihood; ties to the lowest index.
std::size_t select_best(std::span<const LdaModel> models);

/// cfg.runs chains with seeds[0..runs), up to `jobs` in parallel.
FitResult fit_best_of_runs(const dtm::DocTermMatrix& dtm, const LdaConfig& cfg, int jobs = 1);

}  // namespace slr::lda

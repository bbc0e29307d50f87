#pragma once

// Reference computations used by the unit and acceptance tests. They follow
// textbook definitions by a different route than the library (long double
// sums, Jacobi eigenvalues, sequential urn products) so that agreement is
// evidence rather than repetition.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "slr/dtm.hpp"
#include "slr/matrix.hpp"

namespace slr::oracle {

/// Token layout of a DocTermMatrix, in the same order the sampler uses.
struct Layout {
  std::vector<std::uint32_t> words;
  std::vector<std::size_t> doc_of;
};

inline Layout layout(const dtm::DocTermMatrix& m) {
  Layout l;
  for (std::size_t d = 0; d < m.num_docs(); ++d)
    for (const auto& e : m.rows[d])
      for (std::uint32_t c = 0; c < e.count; ++c) {
        l.words.push_back(e.term);
        l.doc_of.push_back(d);
      }
  return l;
}

/// p(w, z) by the chain rule of the two Polya urns (theta and phi integrated
/// out), evaluated term by term in long double.
inline long double joint_probability(const Layout& l, std::size_t D, std::size_t V, int K,
                                     const std::vector<int>& z, long double alpha,
                                     long double beta) {
  std::vector<long double> ndk(D * K, 0), nkv(K * V, 0), nk(K, 0), nd(D, 0);
  long double p = 1;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const std::size_t d = l.doc_of[i];
    const std::size_t v = l.words[i];
    const int k = z[i];
    p *= (ndk[d * K + k] + alpha) / (nd[d] + K * alpha);
    p *= (nkv[k * V + v] + beta) / (nk[k] + V * beta);
    ndk[d * K + k] += 1;
    nkv[k * V + v] += 1;
    nk[k] += 1;
    nd[d] += 1;
  }
  return p;
}

/// p(w | z) alone, by the phi urn.
inline long double likelihood_given_z(const Layout& l, std::size_t V, int K,
                                      const std::vector<int>& z, long double beta) {
  std::vector<long double> nkv(K * V, 0), nk(K, 0);
  long double p = 1;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const std::size_t v = l.words[i];
    const int k = z[i];
    p *= (nkv[k * V + v] + beta) / (nk[k] + V * beta);
    nkv[k * V + v] += 1;
    nk[k] += 1;
  }
  return p;
}

/// z vector with index `code` in base K, token 0 the most significant digit.
inline std::vector<int> decode_assignment(std::size_t code, std::size_t n, int K) {
  std::vector<int> z(n);
  for (std::size_t i = n; i-- > 0;) {
    z[i] = static_cast<int>(code % K);
    code /= K;
  }
  return z;
}

inline std::size_t encode_assignment(const std::vector<std::int32_t>& z, int K) {
  std::size_t code = 0;
  for (auto zi : z) code = code * K + static_cast<std::size_t>(zi);
  return code;
}

/// Exact posterior p(z | w) over all K^N assignments.
inline std::vector<double> enumerate_posterior(const dtm::DocTermMatrix& m, int K, double alpha,
                                               double beta) {
  const Layout l = layout(m);
  std::size_t states = 1;
  for (std::size_t i = 0; i < l.words.size(); ++i) states *= K;
  std::vector<long double> p(states);
  long double total = 0;
  for (std::size_t s = 0; s < states; ++s) {
    p[s] = joint_probability(l, m.num_docs(), m.num_terms(), K,
                             decode_assignment(s, l.words.size(), K), alpha, beta);
    total += p[s];
  }
  std::vector<double> out(states);
  for (std::size_t s = 0; s < states; ++s) out[s] = static_cast<double>(p[s] / total);
  return out;
}

inline double total_variation(const std::vector<double>& a, const std::vector<double>& b) {
  double tv = 0;
  for (std::size_t i = 0; i < a.size(); ++i) tv += std::abs(a[i] - b[i]);
  return tv / 2;
}

inline long double floored_log(long double x) { return std::log(std::max(x, 1e-12L)); }

inline double cao(const Matrix& phi) {
  long double sum = 0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < phi.rows(); ++i)
    for (std::size_t j = i + 1; j < phi.rows(); ++j) {
      long double dot = 0, a = 0, b = 0;
      for (std::size_t v = 0; v < phi.cols(); ++v) {
        dot += static_cast<long double>(phi(i, v)) * phi(j, v);
        a += static_cast<long double>(phi(i, v)) * phi(i, v);
        b += static_cast<long double>(phi(j, v)) * phi(j, v);
      }
      sum += dot / std::sqrt(a * b);
      ++pairs;
    }
  return static_cast<double>(sum / pairs);
}

inline long double kl(const std::vector<long double>& p, const std::vector<long double>& q) {
  long double s = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] > 0) s += p[i] * (floored_log(p[i]) - floored_log(q[i]));
  return s;
}

inline double jsd(const Matrix& phi, std::size_t i, std::size_t j) {
  std::vector<long double> p(phi.cols()), q(phi.cols()), m(phi.cols());
  for (std::size_t v = 0; v < phi.cols(); ++v) {
    p[v] = phi(i, v);
    q[v] = phi(j, v);
    m[v] = (p[v] + q[v]) / 2;
  }
  return static_cast<double>((kl(p, m) + kl(q, m)) / 2);
}

inline double deveaud(const Matrix& phi) {
  long double sum = 0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < phi.rows(); ++i)
    for (std::size_t j = i + 1; j < phi.rows(); ++j) {
      sum += jsd(phi, i, j);
      ++pairs;
    }
  return static_cast<double>(sum / pairs);
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
inline std::vector<long double> jacobi_eigenvalues(std::vector<std::vector<long double>> a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    long double off = 0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-40L) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p][q] == 0) continue;
        const long double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const long double t = (theta >= 0 ? 1 : -1) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const long double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const long double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const long double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<long double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  return ev;
}

/// Singular values of phi as square roots of the eigenvalues of phi phi^T.
inline std::vector<long double> singular_values(const Matrix& phi) {
  const std::size_t K = phi.rows();
  std::vector<std::vector<long double>> g(K, std::vector<long double>(K, 0));
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = 0; j < K; ++j)
      for (std::size_t v = 0; v < phi.cols(); ++v) g[i][j] += static_cast<long double>(phi(i, v)) * phi(j, v);
  auto ev = jacobi_eigenvalues(g);
  for (auto& x : ev) x = std::sqrt(std::max(x, 0.0L));
  return ev;
}

inline std::vector<long double> normalized_descending(std::vector<long double> v) {
  const long double total = std::accumulate(v.begin(), v.end(), 0.0L);
  for (auto& x : v) x /= total;
  std::sort(v.begin(), v.end(), [](long double a, long double b) { return a > b; });
  return v;
}

inline double arun(const Matrix& phi, const Matrix& theta, const std::vector<std::uint32_t>& lengths,
                   bool symmetric = true) {
  const auto c1 = normalized_descending(singular_values(phi));
  std::vector<long double> mass(phi.rows(), 0);
  for (std::size_t d = 0; d < theta.rows(); ++d)
    for (std::size_t k = 0; k < theta.cols(); ++k) mass[k] += static_cast<long double>(lengths[d]) * theta(d, k);
  const auto c2 = normalized_descending(mass);
  const long double forward = kl(c1, c2);
  return static_cast<double>(symmetric ? forward + kl(c2, c1) : forward);
}

/// Harmonic mean of exp(l) computed directly in long double; fine for |l| up to ~11000.
inline double griffiths(const std::vector<double>& logliks) {
  long double inv = 0;
  for (double l : logliks) inv += std::exp(-static_cast<long double>(l));
  return static_cast<double>(-std::log(inv / logliks.size()));
}

/// Pearson r by the raw-moment formula.
inline double pearson(const Matrix& x, std::size_t a, std::size_t b) {
  const long double n = x.rows();
  long double sa = 0, sb = 0, saa = 0, sbb = 0, sab = 0;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    const long double u = x(i, a), v = x(i, b);
    sa += u;
    sb += v;
    saa += u * u;
    sbb += v * v;
    sab += u * v;
  }
  return static_cast<double>((n * sab - sa * sb) / std::sqrt((n * saa - sa * sa) * (n * sbb - sb * sb)));
}

/// Random row-stochastic matrix with strictly positive entries.
template <typename Rng>
Matrix random_stochastic(std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(rows, cols);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  for (std::size_t r = 0; r < rows; ++r) {
    double total = 0;
    for (std::size_t c = 0; c < cols; ++c) total += m(r, c) = u(rng);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) /= total;
  }
  return m;
}

inline double relative_error(double got, double expected) {
  const double scale = std::max(std::abs(expected), 1e-300);
  return std::abs(got - expected) / scale;
}

}  // namespace slr::oracle

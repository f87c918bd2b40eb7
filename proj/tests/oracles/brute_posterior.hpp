#pragma once

// Exact collapsed posterior over topic assignments by enumeration.
// The joint is built as a product of sequential Polya-urn predictives
// (one factor per token for each of z, w and c), which equals the
// Dirichlet-multinomial marginal without going through Gamma functions.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace oracle {

struct TinyModel {
  int K = 2;
  std::size_t V = 0;
  std::vector<std::vector<int>> words;  // per document
  std::vector<std::vector<int>> flags;
  std::vector<double> alpha, eta;
  double xi0 = 1.0, xi1 = 1.0;

  std::size_t tokens() const {
    std::size_t w = 0;
    for (const auto& d : words) w += d.size();
    return w;
  }
};

// Configuration code: token t (document-major order) holds digit t in base K,
// least significant first.
inline std::vector<int> decode(std::uint64_t code, std::size_t tokens, int K) {
  std::vector<int> z(tokens);
  for (std::size_t t = 0; t < tokens; ++t) {
    z[t] = static_cast<int>(code % static_cast<std::uint64_t>(K));
    code /= static_cast<std::uint64_t>(K);
  }
  return z;
}

inline std::uint64_t encode(const std::vector<std::vector<int>>& z, int K) {
  std::uint64_t code = 0, place = 1;
  for (const auto& doc : z)
    for (int k : doc) {
      code += place * static_cast<std::uint64_t>(k);
      place *= static_cast<std::uint64_t>(K);
    }
  return code;
}

inline double log_joint(const TinyModel& m, const std::vector<int>& z) {
  double alpha_sum = 0.0, eta_sum = 0.0;
  for (double a : m.alpha) alpha_sum += a;
  for (double e : m.eta) eta_sum += e;
  const double xi_sum = m.xi0 + m.xi1;

  std::vector<std::vector<int>> word_topic(m.V, std::vector<int>(m.K, 0));
  std::vector<std::vector<int>> flag_topic(2, std::vector<int>(m.K, 0));
  std::vector<int> topic_total(m.K, 0);
  double lp = 0.0;
  std::size_t t = 0;
  for (std::size_t d = 0; d < m.words.size(); ++d) {
    std::vector<int> doc_topic(m.K, 0);
    for (std::size_t n = 0; n < m.words[d].size(); ++n, ++t) {
      const int k = z[t];
      const int w = m.words[d][n];
      const int c = m.flags[d][n];
      lp += std::log((doc_topic[k] + m.alpha[k]) / (static_cast<double>(n) + alpha_sum));
      lp += std::log((word_topic[w][k] + m.eta[w]) / (topic_total[k] + eta_sum));
      lp += std::log((flag_topic[c][k] + (c ? m.xi1 : m.xi0)) / (topic_total[k] + xi_sum));
      ++doc_topic[k];
      ++word_topic[w][k];
      ++flag_topic[c][k];
      ++topic_total[k];
    }
  }
  return lp;
}

// Normalised posterior p(z | w, c) indexed by configuration code.
inline std::vector<double> posterior(const TinyModel& m) {
  const std::size_t W = m.tokens();
  std::uint64_t states = 1;
  for (std::size_t i = 0; i < W; ++i) states *= static_cast<std::uint64_t>(m.K);
  std::vector<double> logp(states);
  double top = -INFINITY;
  for (std::uint64_t s = 0; s < states; ++s) {
    logp[s] = log_joint(m, decode(s, W, m.K));
    top = std::max(top, logp[s]);
  }
  double total = 0.0;
  for (double& x : logp) {
    x = std::exp(x - top);
    total += x;
  }
  for (double& x : logp) x /= total;
  return logp;
}

inline double total_variation(const std::vector<double>& p, const std::vector<double>& q) {
  double tv = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) tv += std::abs(p[i] - q[i]);
  return tv / 2.0;
}

}  // namespace oracle

#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "alterlda/corpus.hpp"
#include "alterlda/matrix.hpp"
#include "alterlda/rng.hpp"

namespace alterlda {

/// Dirichlet concentrations: alpha over topics (length K), eta over words
/// (length V), xi over the two alteration modes.
struct HyperParams {
  int num_topics = 20;
  std::vector<double> alpha;
  std::vector<double> eta;
  std::array<double, 2> xi{1.0, 1.0};

  static HyperParams symmetric(int num_topics, std::size_t vocab_size, double alpha, double eta,
                               std::array<double, 2> xi);

  double alpha_sum() const noexcept;
  double eta_sum() const noexcept;
  double xi_sum() const noexcept { return xi[0] + xi[1]; }

  /// Throws Error{InvalidArgument} unless K >= 1, all entries > 0 and the
  /// vector lengths match K and `vocab_size`.
  void validate(std::size_t vocab_size) const;

  bool operator==(const HyperParams&) const = default;
};

/// Marginals of the four-way counter over (topic, document, alteration
/// mode, word): the conditional only ever reads these.
class CountTables {
 public:
  CountTables() = default;
  CountTables(int num_topics, std::size_t num_docs, std::size_t vocab_size);

  std::int32_t doc_topic(std::size_t m, int k) const { return doc_topic_[m * k_ + k]; }
  std::int32_t word_topic(std::size_t v, int k) const { return word_topic_[v * k_ + k]; }
  std::int32_t topic_flag(int k, int a) const { return topic_flag_[k * 2 + a]; }
  std::int32_t topic_total(int k) const { return topic_total_[k]; }

  /// Moves one token (document m, word v, flag a) into (+1) or out of (-1) topic k.
  void update(std::size_t m, std::size_t v, int a, int k, std::int32_t delta) {
    doc_topic_[m * k_ + k] += delta;
    word_topic_[v * k_ + k] += delta;
    topic_flag_[k * 2 + a] += delta;
    topic_total_[k] += delta;
  }

  int num_topics() const noexcept { return static_cast<int>(k_); }
  std::size_t num_docs() const noexcept { return m_; }
  std::size_t vocab_size() const noexcept { return v_; }

  /// Marginal identities and non-negativity; `total` is the token count W.
  bool consistent(std::size_t total) const;

  bool operator==(const CountTables&) const = default;

  // Raw storage: doc-major M*K, word-major V*K, K*2 and K.
  std::vector<std::int32_t>& doc_topic_data() noexcept { return doc_topic_; }
  std::vector<std::int32_t>& word_topic_data() noexcept { return word_topic_; }
  std::vector<std::int32_t>& topic_flag_data() noexcept { return topic_flag_; }
  std::vector<std::int32_t>& topic_total_data() noexcept { return topic_total_; }

 private:
  std::size_t k_ = 0;
  std::size_t m_ = 0;
  std::size_t v_ = 0;
  std::vector<std::int32_t> doc_topic_;
  std::vector<std::int32_t> word_topic_;
  std::vector<std::int32_t> topic_flag_;
  std::vector<std::int32_t> topic_total_;
};

/// Smoothed point estimates; every row sums to one.
struct PosteriorEstimate {
  Matrix beta;   // K x V topic-word
  Matrix theta;  // M x K document-topic
  Matrix gamma;  // K x 2 topic-alteration tendency

  bool operator==(const PosteriorEstimate&) const = default;
};

using Assignments = std::vector<std::vector<int>>;

/// Topic assignments for one corpus plus the count tables derived from them.
class ModelState {
 public:
  ModelState(std::shared_ptr<const Corpus> corpus, HyperParams hyper, Assignments z,
             std::uint64_t seed, Rng rng, std::uint64_t sweep_index = 0);

  const HyperParams& hyper() const noexcept { return hyper_; }
  const Corpus& corpus() const noexcept { return *corpus_; }
  std::shared_ptr<const Corpus> corpus_handle() const noexcept { return corpus_; }
  const Assignments& assignments() const noexcept { return z_; }
  const CountTables& counts() const noexcept { return counts_; }
  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t sweep_index() const noexcept { return sweep_index_; }
  Rng& rng() noexcept { return rng_; }
  const Rng& rng() const noexcept { return rng_; }

  /// Cached sum of eta (an O(V) reduction otherwise needed per token).
  double eta_sum() const noexcept { return eta_sum_; }

  int word(std::size_t m, std::size_t n) const { return words_[m][n]; }
  int flag(std::size_t m, std::size_t n) const { return flags_[m][n]; }

  // Used by the sampler kernels.
  CountTables& mutable_counts() noexcept { return counts_; }
  void set_assignment(std::size_t m, std::size_t n, int k) { z_[m][n] = k; }
  void advance_sweep() noexcept { ++sweep_index_; }

 private:
  std::shared_ptr<const Corpus> corpus_;
  HyperParams hyper_;
  Assignments z_;
  std::vector<std::vector<int>> words_;
  std::vector<std::vector<std::uint8_t>> flags_;
  CountTables counts_;
  std::uint64_t seed_;
  Rng rng_;
  std::uint64_t sweep_index_;
  double eta_sum_ = 0.0;
};

/// Count tables rebuilt from scratch from (z, w, c).
CountTables tabulate(const Corpus& corpus, const Assignments& z, int num_topics);

}  // namespace alterlda

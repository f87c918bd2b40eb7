#include "alterlda/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "alterlda/error.hpp"

namespace alterlda {

namespace {
constexpr std::string_view kModule = "alterlda-core";
}

HyperParams HyperParams::symmetric(int num_topics, std::size_t vocab_size, double alpha,
                                   double eta, std::array<double, 2> xi) {
  HyperParams h;
  h.num_topics = num_topics;
  h.alpha.assign(static_cast<std::size_t>(std::max(num_topics, 0)), alpha);
  h.eta.assign(vocab_size, eta);
  h.xi = xi;
  return h;
}

double HyperParams::alpha_sum() const noexcept {
  return std::accumulate(alpha.begin(), alpha.end(), 0.0);
}

double HyperParams::eta_sum() const noexcept {
  return std::accumulate(eta.begin(), eta.end(), 0.0);
}

void HyperParams::validate(std::size_t vocab_size) const {
  auto fail = [](const std::string& msg) { throw Error(ErrorKind::InvalidArgument, kModule, msg); };
  if (num_topics < 1) fail("number of topics must be >= 1");
  if (alpha.size() != static_cast<std::size_t>(num_topics)) fail("alpha must have K entries");
  if (eta.size() != vocab_size) fail("eta must have V entries");
  auto positive = [](double x) { return x > 0.0 && std::isfinite(x); };
  if (!std::all_of(alpha.begin(), alpha.end(), positive)) fail("alpha entries must be > 0");
  if (!std::all_of(eta.begin(), eta.end(), positive)) fail("eta entries must be > 0");
  if (!positive(xi[0]) || !positive(xi[1])) fail("xi entries must be > 0");
}

CountTables::CountTables(int num_topics, std::size_t num_docs, std::size_t vocab_size)
    : k_(static_cast<std::size_t>(num_topics)),
      m_(num_docs),
      v_(vocab_size),
      doc_topic_(num_docs * k_, 0),
      word_topic_(vocab_size * k_, 0),
      topic_flag_(k_ * 2, 0),
      topic_total_(k_, 0) {}

bool CountTables::consistent(std::size_t total) const {
  std::vector<std::int64_t> by_doc(k_, 0), by_word(k_, 0), by_flag(k_, 0);
  for (std::size_t m = 0; m < m_; ++m)
    for (std::size_t k = 0; k < k_; ++k) {
      if (doc_topic_[m * k_ + k] < 0) return false;
      by_doc[k] += doc_topic_[m * k_ + k];
    }
  for (std::size_t v = 0; v < v_; ++v)
    for (std::size_t k = 0; k < k_; ++k) {
      if (word_topic_[v * k_ + k] < 0) return false;
      by_word[k] += word_topic_[v * k_ + k];
    }
  std::int64_t sum = 0;
  for (std::size_t k = 0; k < k_; ++k) {
    if (topic_flag_[k * 2] < 0 || topic_flag_[k * 2 + 1] < 0 || topic_total_[k] < 0) return false;
    by_flag[k] = topic_flag_[k * 2] + topic_flag_[k * 2 + 1];
    if (by_doc[k] != topic_total_[k] || by_word[k] != topic_total_[k] ||
        by_flag[k] != topic_total_[k])
      return false;
    sum += topic_total_[k];
  }
  return sum == static_cast<std::int64_t>(total);
}

CountTables tabulate(const Corpus& corpus, const Assignments& z, int num_topics) {
  CountTables counts(num_topics, corpus.num_docs(), corpus.vocab_size());
  for (std::size_t m = 0; m < corpus.num_docs(); ++m) {
    const auto& tokens = corpus.documents[m].tokens;
    for (std::size_t n = 0; n < tokens.size(); ++n)
      counts.update(m, static_cast<std::size_t>(tokens[n].vocab_id), tokens[n].alt_flag, z[m][n], 1);
  }
  return counts;
}

ModelState::ModelState(std::shared_ptr<const Corpus> corpus, HyperParams hyper, Assignments z,
                       std::uint64_t seed, Rng rng, std::uint64_t sweep_index)
    : corpus_(std::move(corpus)),
      hyper_(std::move(hyper)),
      z_(std::move(z)),
      seed_(seed),
      rng_(std::move(rng)),
      sweep_index_(sweep_index) {
  if (!corpus_) throw Error(ErrorKind::InvalidArgument, kModule, "model state needs a corpus");
  hyper_.validate(corpus_->vocab_size());
  eta_sum_ = hyper_.eta_sum();
  const auto& docs = corpus_->documents;
  if (z_.size() != docs.size())
    throw Error(ErrorKind::IndexOutOfRange, kModule, "assignments do not cover every document");
  words_.resize(docs.size());
  flags_.resize(docs.size());
  for (std::size_t m = 0; m < docs.size(); ++m) {
    const auto& tokens = docs[m].tokens;
    if (z_[m].size() != tokens.size())
      throw Error(ErrorKind::IndexOutOfRange, kModule,
                  "assignments of document " + std::to_string(m) + " have the wrong length");
    for (std::size_t n = 0; n < tokens.size(); ++n) {
      if (z_[m][n] < 0 || z_[m][n] >= hyper_.num_topics)
        throw Error(ErrorKind::IndexOutOfRange, kModule, "topic assignment out of range");
      if (tokens[n].vocab_id < 0 ||
          static_cast<std::size_t>(tokens[n].vocab_id) >= corpus_->vocab_size())
        throw Error(ErrorKind::IndexOutOfRange, kModule, "vocabulary id out of range");
      words_[m].push_back(tokens[n].vocab_id);
      flags_[m].push_back(tokens[n].alt_flag);
    }
  }
  counts_ = tabulate(*corpus_, z_, hyper_.num_topics);
}

}  // namespace alterlda

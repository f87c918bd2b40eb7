#include "alterlda/foldin.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "alterlda/error.hpp"
#include "alterlda/rng.hpp"

namespace alterlda {

namespace {

constexpr std::string_view kModule = "alterlda-core";

void check_inputs(const PosteriorEstimate& posterior, const HyperParams& hyper,
                  const FoldInConfig& cfg) {
  const auto k = static_cast<std::size_t>(hyper.num_topics);
  if (hyper.num_topics < 1 || hyper.alpha.size() != k || posterior.beta.rows() != k ||
      posterior.gamma.rows() != k || posterior.gamma.cols() != 2)
    throw Error(ErrorKind::InvalidArgument, kModule, "posterior and hyperparameters disagree on K");
  if (cfg.burn_in < 0 || cfg.sweeps <= cfg.burn_in)
    throw Error(ErrorKind::InvalidArgument, kModule, "fold-in needs sweeps > burn_in >= 0");
}

void check_document(const PosteriorEstimate& posterior, const TokenizedDocument& doc) {
  const auto v = static_cast<int>(posterior.beta.cols());
  for (const Token& tok : doc.tokens)
    if (tok.vocab_id < -1 || tok.vocab_id >= v)
      throw Error(ErrorKind::VocabularyMismatch, kModule,
                  "token '" + tok.surface + "' of '" + doc.doc_id + "' has id " +
                      std::to_string(tok.vocab_id) + " but the model knows " +
                      std::to_string(v) + " words");
}

FoldInResult fold_in_unchecked(const PosteriorEstimate& posterior, const HyperParams& hyper,
                               const TokenizedDocument& doc, const FoldInConfig& cfg,
                               std::uint64_t seed) {
  const int k_count = hyper.num_topics;
  const std::size_t n_tokens = doc.tokens.size();
  FoldInResult result;
  result.doc_id = doc.doc_id;
  result.token_alt_prob.assign(n_tokens, 0.0);
  result.suggested.assign(n_tokens, 0);

  std::vector<std::size_t> known;
  for (std::size_t i = 0; i < n_tokens; ++i)
    if (doc.tokens[i].vocab_id >= 0) known.push_back(i);
  if (known.empty()) return result;

  Rng rng(seed);
  std::vector<int> z(known.size());
  std::vector<double> doc_topic(static_cast<std::size_t>(k_count), 0.0);
  for (int& topic : z) {
    topic = std::min(k_count - 1, static_cast<int>(uniform01(rng) * k_count));
    doc_topic[topic] += 1.0;
  }

  std::vector<double> scores(static_cast<std::size_t>(k_count));
  std::vector<double> alt_sum(known.size(), 0.0);
  for (int sweep = 1; sweep <= cfg.sweeps; ++sweep) {
    for (std::size_t j = 0; j < known.size(); ++j) {
      const auto w = static_cast<std::size_t>(doc.tokens[known[j]].vocab_id);
      doc_topic[z[j]] -= 1.0;
      double total = 0.0;
      for (int k = 0; k < k_count; ++k) {
        scores[k] = (doc_topic[k] + hyper.alpha[k]) * posterior.beta(k, w);
        total += scores[k];
      }
      const double u = uniform01(rng) * total;
      int topic = k_count - 1;
      double acc = 0.0;
      for (int k = 0; k < k_count; ++k) {
        acc += scores[k];
        if (u < acc) {
          topic = k;
          break;
        }
      }
      z[j] = topic;
      doc_topic[topic] += 1.0;
    }
    if (sweep > cfg.burn_in)
      for (std::size_t j = 0; j < known.size(); ++j) alt_sum[j] += posterior.gamma(z[j], 1);
  }
  const double samples = cfg.sweeps - cfg.burn_in;
  for (std::size_t j = 0; j < known.size(); ++j) {
    const double p = alt_sum[j] / samples;
    result.token_alt_prob[known[j]] = p;
    result.suggested[known[j]] = p >= cfg.threshold ? 1 : 0;
  }
  return result;
}

}  // namespace

FoldInResult fold_in(const PosteriorEstimate& posterior, const HyperParams& hyper,
                     const TokenizedDocument& doc, const FoldInConfig& cfg, std::uint64_t seed) {
  check_inputs(posterior, hyper, cfg);
  check_document(posterior, doc);
  return fold_in_unchecked(posterior, hyper, doc, cfg, seed);
}

std::vector<FoldInResult> fold_in_batch(const PosteriorEstimate& posterior,
                                        const HyperParams& hyper,
                                        const std::vector<TokenizedDocument>& docs,
                                        const FoldInConfig& cfg, std::uint64_t seed,
                                        Execution exec) {
  check_inputs(posterior, hyper, cfg);
  for (const auto& doc : docs) check_document(posterior, doc);

  std::vector<FoldInResult> results(docs.size());
  const auto n = static_cast<std::ptrdiff_t>(docs.size());
  if (exec == Execution::Serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i)
      results[i] = fold_in_unchecked(posterior, hyper, docs[i], cfg, derive_seed(seed, i));
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i)
      results[i] = fold_in_unchecked(posterior, hyper, docs[i], cfg, derive_seed(seed, i));
  }
  return results;
}

TokenizedDocument remap_to_vocabulary(const TokenizedDocument& doc, const Vocabulary& vocabulary) {
  TokenizedDocument out = doc;
  for (Token& tok : out.tokens) tok.vocab_id = vocabulary.find(tok.surface).value_or(-1);
  return out;
}

std::vector<SuggestionRow> suggest_report(const std::vector<FoldInResult>& results,
                                          const Corpus& docs, std::string_view group_by,
                                          std::size_t top_n) {
  std::unordered_map<std::string_view, const TokenizedDocument*> by_id;
  for (const auto& doc : docs.documents) by_id.emplace(doc.doc_id, &doc);

  struct Tally {
    std::size_t count = 0;
    std::map<std::string, std::size_t> words;
  };
  std::map<std::string, Tally> groups;
  for (const FoldInResult& r : results) {
    auto it = by_id.find(r.doc_id);
    if (it == by_id.end())
      throw Error(ErrorKind::InvalidArgument, kModule,
                  "result for unknown document '" + r.doc_id + "'");
    const TokenizedDocument& doc = *it->second;
    if (doc.tokens.size() != r.suggested.size())
      throw Error(ErrorKind::InvalidArgument, kModule,
                  "result for '" + r.doc_id + "' does not match the document length");
    Tally& tally = groups[metadata_value(doc, group_by)];
    for (std::size_t i = 0; i < r.suggested.size(); ++i) {
      if (!r.suggested[i]) continue;
      ++tally.count;
      ++tally.words[doc.tokens[i].surface];
    }
  }

  std::vector<SuggestionRow> rows;
  for (auto& [group, tally] : groups) {
    SuggestionRow row{group, tally.count, {}};
    row.top_words.assign(tally.words.begin(), tally.words.end());
    std::stable_sort(row.top_words.begin(), row.top_words.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    if (row.top_words.size() > top_n) row.top_words.resize(top_n);
    rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const SuggestionRow& a, const SuggestionRow& b) {
    return a.suggested_count < b.suggested_count;
  });
  return rows;
}

}  // namespace alterlda

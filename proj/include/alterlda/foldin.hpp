#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "alterlda/corpus.hpp"
#include "alterlda/execution.hpp"
#include "alterlda/model.hpp"

namespace alterlda {

struct FoldInConfig {
  int sweeps = 200;
  int burn_in = 100;
  double threshold = 0.5;
};

struct FoldInResult {
  std::string doc_id;
  std::vector<double> token_alt_prob;
  std::vector<std::uint8_t> suggested;  // token_alt_prob >= threshold

  bool operator==(const FoldInResult&) const = default;
};

/// Samples topics for an unseen document with beta and gamma held fixed;
/// alteration flags are unobserved, so each token is scored by the mean of
/// gamma[z, 1] over post-burn-in sweeps. Tokens with vocab_id -1 are
/// out-of-vocabulary: probability 0, never suggested.
///
/// Throws Error{VocabularyMismatch} for ids beyond the trained vocabulary.
FoldInResult fold_in(const PosteriorEstimate& posterior, const HyperParams& hyper,
                     const TokenizedDocument& doc, const FoldInConfig& cfg, std::uint64_t seed);

/// fold_in over many documents; document i uses derive_seed(seed, i).
std::vector<FoldInResult> fold_in_batch(const PosteriorEstimate& posterior,
                                        const HyperParams& hyper,
                                        const std::vector<TokenizedDocument>& docs,
                                        const FoldInConfig& cfg, std::uint64_t seed,
                                        Execution exec = Execution::Parallel);

/// Re-indexes a document against another vocabulary; unknown surfaces get -1.
TokenizedDocument remap_to_vocabulary(const TokenizedDocument& doc, const Vocabulary& vocabulary);

struct SuggestionRow {
  std::string group;
  std::size_t suggested_count = 0;
  // Most frequent suggested surfaces, descending by count (ties by surface).
  std::vector<std::pair<std::string, std::size_t>> top_words;

  bool operator==(const SuggestionRow&) const = default;
};

/// Suggested-token counts per metadata group, ascending by count (ties by
/// group name), each with its `top_n` most common suggested words.
/// `docs` supplies the surfaces and metadata of the folded-in documents.
std::vector<SuggestionRow> suggest_report(const std::vector<FoldInResult>& results,
                                          const Corpus& docs, std::string_view group_by,
                                          std::size_t top_n = 25);

}  // namespace alterlda

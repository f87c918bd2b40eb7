#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "alterlda/tokenizer.hpp"

namespace alterlda {

/// Dense bijection surface form <-> id in [0, size()).
class Vocabulary {
 public:
  /// Returns the id of `surface`, inserting it if new.
  int intern(std::string_view surface);
  std::optional<int> find(std::string_view surface) const;
  const std::string& word(int id) const { return words_.at(static_cast<std::size_t>(id)); }
  std::size_t size() const noexcept { return words_.size(); }
  const std::vector<std::string>& words() const noexcept { return words_; }

  /// FNV-1a over the id-ordered surfaces; identifies a vocabulary in model files.
  std::uint64_t hash() const noexcept;

  bool operator==(const Vocabulary& other) const { return words_ == other.words_; }

 private:
  std::vector<std::string> words_;
  std::unordered_map<std::string, int> ids_;
};

struct Corpus {
  std::vector<TokenizedDocument> documents;
  Vocabulary vocabulary;

  std::size_t num_docs() const noexcept { return documents.size(); }
  std::size_t vocab_size() const noexcept { return vocabulary.size(); }
  std::size_t total_tokens() const noexcept;

  bool operator==(const Corpus&) const = default;
};

/// Metadata used for grouping: "author", "addressee", "date" or "doc_id".
/// Absent optional values read as "". Throws Error{UnknownMetadataKey}.
std::string metadata_value(const TokenizedDocument& doc, std::string_view key);

/// Assigns vocabulary ids by first occurrence (document order, then token
/// order). Throws Error{DuplicateDocId}.
Corpus build_corpus(std::vector<TokenizedDocument> docs);

/// Same documents over an existing vocabulary; ids are kept, so every
/// token's vocab_id must already be valid for `vocabulary`.
Corpus make_corpus(std::vector<TokenizedDocument> docs, Vocabulary vocabulary);

/// Re-derives each token's alt_flag from span categories: 1 exactly for
/// tokens of ContentRelated spans. Spans still Unclassified keep flag 1.
void apply_span_categories(Corpus& corpus);

// JSON-lines corpus: one document per line plus a vocabulary sidecar
// (`<path>.vocab`, one surface per line, line number = id).
void write_corpus_jsonl(const Corpus& corpus, std::ostream& docs, std::ostream& vocab);
Corpus read_corpus_jsonl(std::istream& docs, std::istream* vocab = nullptr);

void save_corpus(const Corpus& corpus, const std::filesystem::path& path);
Corpus load_corpus(const std::filesystem::path& path);
std::filesystem::path vocab_sidecar(const std::filesystem::path& corpus_path);

}  // namespace alterlda

#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "alterlda/corpus.hpp"
#include "oracles/brute_posterior.hpp"

namespace testing_support {

inline std::filesystem::path source_dir() { return ALTERLDA_SOURCE_DIR; }
inline std::filesystem::path fixture_dir() { return source_dir() / "data" / "fixture"; }

// Corpus with words named "w<id>" and the given flags.
inline alterlda::Corpus tiny_corpus(const std::vector<std::vector<int>>& words,
                                    const std::vector<std::vector<int>>& flags, std::size_t V) {
  alterlda::Vocabulary vocab;
  for (std::size_t v = 0; v < V; ++v) vocab.intern("w" + std::to_string(v));
  std::vector<alterlda::TokenizedDocument> docs;
  for (std::size_t m = 0; m < words.size(); ++m) {
    alterlda::TokenizedDocument doc;
    doc.doc_id = "d" + std::to_string(m);
    doc.author = m % 2 == 0 ? "even" : "odd";
    for (std::size_t n = 0; n < words[m].size(); ++n) {
      alterlda::Token tok;
      tok.vocab_id = words[m][n];
      tok.surface = vocab.word(words[m][n]);
      tok.alt_flag = static_cast<std::uint8_t>(flags[m][n]);
      doc.tokens.push_back(tok);
    }
    docs.push_back(std::move(doc));
  }
  return alterlda::make_corpus(std::move(docs), std::move(vocab));
}

inline std::shared_ptr<const alterlda::Corpus> tiny_corpus_ptr(const oracle::TinyModel& m) {
  return std::make_shared<const alterlda::Corpus>(tiny_corpus(m.words, m.flags, m.V));
}

// A fresh, empty directory under the system temp directory.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("alterlda-test-" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace testing_support

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "alterlda/span.hpp"
#include "alterlda/tei.hpp"

namespace alterlda {

struct TokenizerConfig {
  bool keep_punct = false;
  std::set<std::string, std::less<>> stopwords;
};

struct Token {
  std::string surface;
  int vocab_id = -1;  // -1 until the document joins a corpus
  std::uint8_t alt_flag = 0;
  std::optional<int> span_id;

  bool operator==(const Token&) const = default;
};

struct TokenizedDocument {
  std::string doc_id;
  std::string author;
  std::optional<std::string> addressee;
  std::optional<std::string> date;
  std::vector<Token> tokens;
  std::vector<AlterationSpan> spans;

  std::size_t size() const noexcept { return tokens.size(); }
  bool operator==(const TokenizedDocument&) const = default;
};

/// Splits UTF-8 text on Unicode (UAX #29) word boundaries. Whitespace is
/// always dropped; punctuation runs are kept only when `keep_punct`.
std::vector<std::string> split_words(std::string_view text, bool keep_punct);

/// True if the token holds at least one letter or digit.
bool is_word_token(std::string_view token);

/// Case-folded copy (Unicode full case folding).
std::string fold_case(std::string_view text);

/// Decodes UTF-8 to code points; invalid sequences become U+FFFD.
std::u32string to_code_points(std::string_view text);

/// Note segments never enter the token stream; they only populate spans.
/// Span token lists are always tokenized with punctuation kept.
TokenizedDocument tokenize(const RawDocument& doc, const TokenizerConfig& cfg = {});

}  // namespace alterlda

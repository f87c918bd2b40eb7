#pragma once

#include <filesystem>
#include <iosfwd>
#include <regex>
#include <string>
#include <vector>

#include "alterlda/corpus.hpp"
#include "alterlda/execution.hpp"
#include "alterlda/lexicon.hpp"
#include "alterlda/span.hpp"

namespace alterlda {

/// Token patterns that mark a paratext: numerals, dates, foliation markers.
class ParatextPatterns {
 public:
  /// The built-in set: digit runs (optionally r/v), dd.mm.yyyy-like dates,
  /// ISO dates, roman numerals, month names and foliation abbreviations.
  static ParatextPatterns defaults();
  /// One ECMAScript regex per line; blank lines and `#` comments skipped.
  static ParatextPatterns read(std::istream& in);
  static ParatextPatterns load(const std::filesystem::path& path);

  void add(const std::string& pattern);
  bool matches(const std::string& token) const;
  const std::vector<std::string>& sources() const noexcept { return sources_; }

 private:
  std::vector<std::string> sources_;
  std::vector<std::regex> compiled_;
};

struct RuleConfig {
  std::size_t max_dist = 2;
  double style_threshold = 0.3;
  bool paratext_accept_unknown_hand = false;
  ParatextPatterns paratext_patterns = ParatextPatterns::defaults();
};

/// Non-author addition made only of paratext patterns, with nothing deleted.
bool classify_paratext(const AlterationSpan& span, const RuleConfig& cfg);

/// Every positionally aligned (before, after) word pair fuzzy-matches the
/// same dictionary entry within `max_dist`. Throws Error{EmptyDictionary}.
bool classify_spelling(const AlterationSpan& span, const LemmaDictionary& dict,
                       std::size_t max_dist);

/// Same lemma multiset on both sides, different surface sequence.
bool classify_grammar(const AlterationSpan& span, const LemmaDictionary& dict);

/// Mean embeddings of both sides closer than `threshold` in cosine distance.
bool classify_stylistic(const AlterationSpan& span, const WordVectors& vecs, double threshold);

struct RuleDeps {
  const LemmaDictionary& dict;
  const WordVectors& vecs;
  const RuleConfig& cfg;
};

/// Paratext, spelling, grammar, stylistic in that order; the first hit
/// wins and anything left is ContentRelated.
Category classify_cascade(const AlterationSpan& span, const RuleDeps& deps);

/// The entries of `dict` nearest to `word`, if the nearest lies within
/// `max_dist` (empty otherwise). Indices into dict.candidates(), ascending.
std::vector<std::size_t> nearest_entries(const LemmaDictionary& dict, std::string_view word,
                                         std::size_t max_dist);

/// Classifies every Unclassified span of the corpus in place and refreshes
/// token alteration flags. Returns the number of spans classified.
std::size_t classify_corpus(Corpus& corpus, const RuleDeps& deps,
                            Execution exec = Execution::Parallel);

}  // namespace alterlda

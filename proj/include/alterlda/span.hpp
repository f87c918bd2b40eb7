#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alterlda/tei.hpp"

namespace alterlda {

enum class Category { Unclassified, Paratext, Spelling, Grammar, Stylistic, ContentRelated };

std::string_view to_string(Category category) noexcept;
Category category_from_string(std::string_view text);

/// A contiguous group of added and/or deleted tokens. Token lists keep
/// punctuation tokens; the classifiers strip them where they need words only.
class AlterationSpan {
 public:
  int span_id = 0;
  std::string doc_id;
  std::vector<std::string> before_tokens;  // deleted text
  std::vector<std::string> after_tokens;   // added text (or note text)
  Scribe hand_scribe = Scribe::Author;
  bool from_note = false;
  std::optional<std::string> note_type;

  Category category() const noexcept { return category_; }

  /// Write-once: only Unclassified -> concrete category is allowed.
  void assign(Category category);

  bool operator==(const AlterationSpan&) const = default;

 private:
  Category category_ = Category::Unclassified;
};

}  // namespace alterlda

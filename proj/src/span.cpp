#include "alterlda/span.hpp"

#include "alterlda/error.hpp"

namespace alterlda {

std::string_view to_string(Category category) noexcept {
  switch (category) {
    case Category::Unclassified: return "Unclassified";
    case Category::Paratext: return "Paratext";
    case Category::Spelling: return "Spelling";
    case Category::Grammar: return "Grammar";
    case Category::Stylistic: return "Stylistic";
    case Category::ContentRelated: return "ContentRelated";
  }
  return "Unclassified";
}

Category category_from_string(std::string_view text) {
  for (Category c : {Category::Unclassified, Category::Paratext, Category::Spelling,
                     Category::Grammar, Category::Stylistic, Category::ContentRelated}) {
    if (to_string(c) == text) return c;
  }
  throw Error(ErrorKind::FormatError, "rule-classifier",
              "unknown category '" + std::string(text) + "'");
}

void AlterationSpan::assign(Category category) {
  if (category_ != Category::Unclassified || category == Category::Unclassified)
    throw Error(ErrorKind::InvalidArgument, "rule-classifier",
                "span " + std::to_string(span_id) + " of '" + doc_id + "' is already " +
                    std::string(to_string(category_)));
  category_ = category;
}

}  // namespace alterlda

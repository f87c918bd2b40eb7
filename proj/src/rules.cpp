#include "alterlda/rules.hpp"

#include <algorithm>
#include <fstream>

#include "alterlda/error.hpp"
#include "alterlda/levenshtein.hpp"
#include "alterlda/tokenizer.hpp"

namespace alterlda {

namespace {

constexpr std::string_view kModule = "rule-classifier";

std::vector<std::string> words_only(const std::vector<std::string>& tokens) {
  std::vector<std::string> out;
  std::copy_if(tokens.begin(), tokens.end(), std::back_inserter(out),
               [](const std::string& t) { return is_word_token(t); });
  return out;
}

void require_unclassified(const AlterationSpan& span) {
  if (span.category() != Category::Unclassified)
    throw Error(ErrorKind::InvalidArgument, kModule,
                "span " + std::to_string(span.span_id) + " is already classified");
}

}  // namespace

ParatextPatterns ParatextPatterns::defaults() {
  ParatextPatterns p;
  p.add(R"(^[0-9]+[rv]?$)");
  p.add(R"(^[0-9]{1,2}\.[0-9]{1,2}\.([0-9]{2}|[0-9]{4})$)");
  p.add(R"(^[0-9]{1,2}\.$)");
  p.add(R"(^[0-9]{4}-[0-9]{2}-[0-9]{2}$)");
  p.add(R"(^[IVXLCDM]+$)");
  p.add(R"(^[ivxlcdm]+$)");
  p.add(
      "^(Januar|Februar|März|April|Mai|Juni|Juli|August|September|Oktober|November|Dezember|"
      "Jan|Feb|Mär|Apr|Jun|Jul|Aug|Sep|Sept|Okt|Nov|Dez)$");
  p.add(R"(^(fol|Fol|Bl|Blatt|f|S|p)$)");
  return p;
}

ParatextPatterns ParatextPatterns::read(std::istream& in) {
  ParatextPatterns p;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    p.add(line);
  }
  return p;
}

ParatextPatterns ParatextPatterns::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, kModule, "cannot read patterns " + path.string());
  return read(in);
}

void ParatextPatterns::add(const std::string& pattern) {
  try {
    compiled_.emplace_back(pattern, std::regex::ECMAScript);
  } catch (const std::regex_error& e) {
    throw Error(ErrorKind::FormatError, kModule, "bad paratext pattern '" + pattern + "': " + e.what());
  }
  sources_.push_back(pattern);
}

bool ParatextPatterns::matches(const std::string& token) const {
  return std::any_of(compiled_.begin(), compiled_.end(),
                     [&](const std::regex& re) { return std::regex_match(token, re); });
}

bool classify_paratext(const AlterationSpan& span, const RuleConfig& cfg) {
  require_unclassified(span);
  if (span.hand_scribe == Scribe::Author) return false;
  if (span.hand_scribe == Scribe::Unknown && !cfg.paratext_accept_unknown_hand) return false;
  if (!words_only(span.before_tokens).empty()) return false;
  // Punctuation such as the dot of "Bl." is part of a marker, so only words count.
  auto after = words_only(span.after_tokens);
  if (after.empty()) return false;
  return std::all_of(after.begin(), after.end(),
                     [&](const std::string& t) { return cfg.paratext_patterns.matches(t); });
}

std::vector<std::size_t> nearest_entries(const LemmaDictionary& dict, std::string_view word,
                                         std::size_t max_dist) {
  const auto& candidates = dict.candidates();
  const std::u32string target = to_code_points(word);
  std::vector<std::size_t> best;
  std::size_t best_dist = max_dist;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const std::u32string& cand = candidates[i].code_points;
    const std::size_t gap =
        cand.size() > target.size() ? cand.size() - target.size() : target.size() - cand.size();
    if (gap > best_dist) continue;
    const std::size_t d = bounded_levenshtein(target, cand, best_dist);
    if (d > best_dist) continue;
    if (d < best_dist || best.empty()) {
      if (d < best_dist) best.clear();
      best_dist = d;
    }
    best.push_back(i);
  }
  return best;
}

bool classify_spelling(const AlterationSpan& span, const LemmaDictionary& dict,
                       std::size_t max_dist) {
  require_unclassified(span);
  if (dict.empty()) throw Error(ErrorKind::EmptyDictionary, kModule, "lemma dictionary is empty");
  const auto before = words_only(span.before_tokens);
  const auto after = words_only(span.after_tokens);
  if (before.empty() || before.size() != after.size()) return false;
  for (std::size_t i = 0; i < before.size(); ++i) {
    if (before[i] == after[i]) continue;
    const auto left = nearest_entries(dict, before[i], max_dist);
    const auto right = nearest_entries(dict, after[i], max_dist);
    std::vector<std::size_t> common;
    std::set_intersection(left.begin(), left.end(), right.begin(), right.end(),
                          std::back_inserter(common));
    if (common.empty()) return false;
  }
  return true;
}

bool classify_grammar(const AlterationSpan& span, const LemmaDictionary& dict) {
  require_unclassified(span);
  auto lemmas = [&](const std::vector<std::string>& tokens) {
    std::vector<std::string> out;
    for (const auto& t : words_only(tokens)) out.push_back(dict.lemma_of(t));
    std::sort(out.begin(), out.end());
    return out;
  };
  if (span.before_tokens == span.after_tokens) return false;
  return lemmas(span.before_tokens) == lemmas(span.after_tokens);
}

bool classify_stylistic(const AlterationSpan& span, const WordVectors& vecs, double threshold) {
  require_unclassified(span);
  const auto before = words_only(span.before_tokens);
  const auto after = words_only(span.after_tokens);
  if (before.empty() || after.empty()) return false;
  auto lhs = vecs.mean(before);
  auto rhs = vecs.mean(after);
  if (!lhs || !rhs) return false;
  auto dist = cosine_distance(*lhs, *rhs);
  return dist && *dist < threshold;
}

Category classify_cascade(const AlterationSpan& span, const RuleDeps& deps) {
  if (classify_paratext(span, deps.cfg)) return Category::Paratext;
  if (classify_spelling(span, deps.dict, deps.cfg.max_dist)) return Category::Spelling;
  if (classify_grammar(span, deps.dict)) return Category::Grammar;
  if (classify_stylistic(span, deps.vecs, deps.cfg.style_threshold)) return Category::Stylistic;
  return Category::ContentRelated;
}

std::size_t classify_corpus(Corpus& corpus, const RuleDeps& deps, Execution exec) {
  std::vector<AlterationSpan*> pending;
  for (auto& doc : corpus.documents)
    for (auto& span : doc.spans)
      if (span.category() == Category::Unclassified) pending.push_back(&span);
  if (!pending.empty() && deps.dict.empty())
    throw Error(ErrorKind::EmptyDictionary, kModule, "lemma dictionary is empty");

  const auto n = static_cast<std::ptrdiff_t>(pending.size());
  std::vector<Category> result(pending.size(), Category::Unclassified);
  if (exec == Execution::Serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) result[i] = classify_cascade(*pending[i], deps);
  } else {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < n; ++i) result[i] = classify_cascade(*pending[i], deps);
  }
  for (std::size_t i = 0; i < pending.size(); ++i) pending[i]->assign(result[i]);
  apply_span_categories(corpus);
  return pending.size();
}

}  // namespace alterlda

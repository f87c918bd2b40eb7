#include <sstream>

#include "alterlda/error.hpp"
#include "alterlda/levenshtein.hpp"
#include "alterlda/lexicon.hpp"
#include "alterlda/rules.hpp"
#include "alterlda/tokenizer.hpp"
#include "doctest.h"

using namespace alterlda;

namespace {

AlterationSpan span(std::vector<std::string> before, std::vector<std::string> after,
                    Scribe hand = Scribe::Author) {
  AlterationSpan s;
  s.before_tokens = std::move(before);
  s.after_tokens = std::move(after);
  s.hand_scribe = hand;
  return s;
}

LemmaDictionary small_dictionary() {
  std::istringstream in(
      "# surface\tlemma\tpos\n"
      "würde\twerden\tVERB\n"
      "wird\twerden\tVERB\n"
      "ging\tgehen\tVERB\n"
      "gehe\tgehen\tVERB\n"
      "Haus\tHaus\tNOUN\n"
      "Boot\tBoot\tNOUN\n"
      "Maus\tMaus\tNOUN\n"
      "Brief\tBrief\tNOUN\n"
      "Briefe\tBrief\tNOUN\n"
      "daher\tdaher\tADV\n"
      "es\tes\tPRON\n");
  return LemmaDictionary::read(in);
}

WordVectors small_vectors() {
  std::istringstream in(
      "6 3\n"
      "daher 1 0 0\n"
      "bedarf 0 1 0\n"
      "es 0 0 1\n"
      "schnell 1 1 0\n"
      "rasch 1 0.9 0.1\n"
      "langsam -1 0 1\n");
  return WordVectors::read(in);
}

}  // namespace

TEST_SUITE("rules") {
  TEST_CASE("paratext") {
    RuleConfig cfg;
    CHECK(classify_paratext(span({}, {"6"}, Scribe::Archivist), cfg));
    CHECK_FALSE(classify_paratext(span({}, {"lieber", "Freund"}, Scribe::Author), cfg));
    CHECK_FALSE(classify_paratext(span({}, {"6"}, Scribe::Author), cfg));
    CHECK(classify_paratext(span({}, {"Bl", ".", "12"}, Scribe::Archivist), cfg));
    CHECK(classify_paratext(span({}, {"3.4.1921"}, Scribe::Editor), cfg));
    CHECK_FALSE(classify_paratext(span({"x"}, {"6"}, Scribe::Archivist), cfg));
    CHECK_FALSE(classify_paratext(span({}, {"Freund"}, Scribe::Archivist), cfg));

    const auto unknown = span({}, {"99"}, Scribe::Unknown);
    CHECK_FALSE(classify_paratext(unknown, cfg));
    cfg.paratext_accept_unknown_hand = true;
    CHECK(classify_paratext(unknown, cfg));
  }

  TEST_CASE("paratext patterns are configurable") {
    std::istringstream in("# stamps\n^STAMP$\n");
    RuleConfig cfg;
    cfg.paratext_patterns = ParatextPatterns::read(in);
    CHECK(classify_paratext(span({}, {"STAMP"}, Scribe::Archivist), cfg));
    CHECK_FALSE(classify_paratext(span({}, {"6"}, Scribe::Archivist), cfg));
    CHECK_THROWS_AS(cfg.paratext_patterns.add("(unclosed"), Error);
  }

  TEST_CASE("spelling") {
    const auto dict = small_dictionary();
    CHECK(classify_spelling(span({"wuürde"}, {"würde"}), dict, 2));
    CHECK_FALSE(classify_spelling(span({"Haus"}, {"Boot"}), dict, 2));
    CHECK(classify_spelling(span({"Haus"}, {"Haus"}), dict, 2));
    CHECK_FALSE(classify_spelling(span({"ging"}, {"gehe"}), dict, 2));
    CHECK_FALSE(classify_spelling(span({"Haus", "Boot"}, {"Haus"}), dict, 2));
    CHECK_FALSE(classify_spelling(span({}, {"Haus"}), dict, 2));
    CHECK_FALSE(classify_spelling(span({"Hxxxs"}, {"Haus"}), dict, 2));
    CHECK(classify_spelling(span({"Hxxxs"}, {"Haus"}), dict, 3));
    CHECK_THROWS_AS(classify_spelling(span({"a"}, {"b"}), LemmaDictionary{}, 2), Error);
  }

  TEST_CASE("nearest entries match an exhaustive scan") {
    const auto dict = small_dictionary();
    for (const char* word : {"Haus", "Baus", "Boat", "wuürde", "gingen", "Mau", "zzzzzz"}) {
      const auto& cands = dict.candidates();
      std::size_t best = 3;
      for (const auto& c : cands) best = std::min(best, levenshtein(c.text, word));
      std::vector<std::size_t> expected;
      if (best <= 2)
        for (std::size_t i = 0; i < cands.size(); ++i)
          if (levenshtein(cands[i].text, word) == best) expected.push_back(i);
      CHECK(nearest_entries(dict, word, 2) == expected);
    }
  }

  TEST_CASE("grammar") {
    const auto dict = small_dictionary();
    CHECK(classify_grammar(span({"ging"}, {"gehe"}), dict));
    CHECK_FALSE(classify_grammar(span({"Haus"}, {"Haus"}), dict));
    CHECK_FALSE(classify_grammar(span({"Haus"}, {"Boot"}), dict));
    CHECK(classify_grammar(span({"Briefe"}, {"Brief"}), dict));
    CHECK(classify_grammar(span({}, {","}), dict));
    CHECK(classify_grammar(span({"."}, {}), dict));
  }

  TEST_CASE("stylistic") {
    const auto vecs = small_vectors();
    CHECK(classify_stylistic(span({"Daher", "bedarf", "es"}, {"Es", "bedarf", "daher"}), vecs, 1e-9));
    CHECK(classify_stylistic(span({"schnell"}, {"schnell"}), vecs, 0.3));
    CHECK(classify_stylistic(span({"schnell"}, {"rasch"}), vecs, 0.3));
    CHECK_FALSE(classify_stylistic(span({"schnell"}, {"langsam"}), vecs, 0.3));
    CHECK_FALSE(classify_stylistic(span({"unbekannt"}, {"rasch"}), vecs, 0.3));
    CHECK_FALSE(classify_stylistic(span({}, {"rasch"}), vecs, 0.3));
  }

  TEST_CASE("cosine distance") {
    CHECK(cosine_distance({1, 0}, {0, 1}).value() == doctest::Approx(1.0));
    CHECK(cosine_distance({1, 0}, {-2, 0}).value() == doctest::Approx(2.0));
    CHECK_FALSE(cosine_distance({0, 0}, {1, 0}).has_value());
  }

  TEST_CASE("cascade order and determinism") {
    const auto dict = small_dictionary();
    const auto vecs = small_vectors();
    RuleConfig cfg;
    RuleDeps deps{dict, vecs, cfg};
    CHECK(classify_cascade(span({}, {"6"}, Scribe::Archivist), deps) == Category::Paratext);
    CHECK(classify_cascade(span({"wuürde"}, {"würde"}), deps) == Category::Spelling);
    CHECK(classify_cascade(span({"ging"}, {"gehe"}), deps) == Category::Grammar);
    CHECK(classify_cascade(span({"schnell"}, {"rasch"}), deps) == Category::Stylistic);
    const auto sickness = span({"leidet", "schon", "seit", "längerer", "Zeit"}, {});
    CHECK(classify_cascade(sickness, deps) == Category::ContentRelated);
    CHECK(classify_cascade(sickness, deps) == classify_cascade(sickness, deps));
  }

  TEST_CASE("classifiers refuse classified spans") {
    const auto dict = small_dictionary();
    auto s = span({"ging"}, {"gehe"});
    s.assign(Category::Grammar);
    CHECK_THROWS_AS(classify_grammar(s, dict), Error);
  }

  TEST_CASE("lexicon file errors") {
    std::istringstream conflict("a\tb\na\tc\n");
    CHECK_THROWS_AS(LemmaDictionary::read(conflict), Error);
    std::istringstream short_vec("1 3\nx 1 2\n");
    try {
      WordVectors::read(short_vec);
      FAIL("expected DimensionMismatch");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DimensionMismatch);
    }
    WordVectors v(2);
    CHECK_THROWS_AS(v.add("x", {1, 2, 3}), Error);
  }

  TEST_CASE("serial and parallel corpus classification agree") {
    const auto dict = small_dictionary();
    const auto vecs = small_vectors();
    RuleConfig cfg;
    Corpus a;
    for (int d = 0; d < 40; ++d) {
      TokenizedDocument doc;
      doc.doc_id = "d" + std::to_string(d);
      const std::vector<AlterationSpan> pool{span({}, {"6"}, Scribe::Archivist),
                                             span({"wuürde"}, {"würde"}), span({"ging"}, {"gehe"}),
                                             span({"schnell"}, {"rasch"}), span({"Haus"}, {})};
      for (int i = 0; i < 5; ++i) {
        auto s = pool[(d + i) % pool.size()];
        s.span_id = i;
        s.doc_id = doc.doc_id;
        doc.spans.push_back(s);
      }
      a.documents.push_back(doc);
    }
    Corpus b = a;
    CHECK(classify_corpus(a, RuleDeps{dict, vecs, cfg}, Execution::Serial) == 200);
    CHECK(classify_corpus(b, RuleDeps{dict, vecs, cfg}, Execution::Parallel) == 200);
    CHECK(a == b);
    CHECK(classify_corpus(a, RuleDeps{dict, vecs, cfg}, Execution::Serial) == 0);
  }
}

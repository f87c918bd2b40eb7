#include <string>

#include "alterlda/error.hpp"
#include "alterlda/tei.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace alterlda;

namespace {

std::string tei(const std::string& header_extra, const std::string& body) {
  return R"(<?xml version="1.0" encoding="UTF-8"?>
<TEI xmlns="http://www.tei-c.org/ns/1.0" xml:id="doc1">
  <teiHeader>
    <profileDesc>
      <handNotes>)" +
         header_extra + R"(</handNotes>
      <correspDesc>
        <correspAction type="sent"><persName>Ingeborg  Muster</persName><date when="1921-05-03"/></correspAction>
        <correspAction type="received"><persName>Max Beispiel</persName></correspAction>
      </correspDesc>
    </profileDesc>
  </teiHeader>
  <text><body>)" +
         body + "</body></text></TEI>";
}

const std::string kHands =
    R"(<handNote xml:id="ink" scribe="author"/><handNote xml:id="pencil_1" scribe="archivist"/>)";

}  // namespace

TEST_SUITE("tei") {
  TEST_CASE("archivist foliation note") {
    auto doc = parse_tei(tei(kHands, R"(<p><note type="foliation" hand="#pencil_1">6</note></p>)"));
    REQUIRE(doc.segments.size() == 1);
    const auto& seg = doc.segments[0];
    CHECK(seg.text == "6");
    CHECK(seg.kind == SegmentKind::Note);
    CHECK(seg.note_type == "foliation");
    CHECK(seg.hand_scribe == Scribe::Archivist);
    CHECK(seg.hand_id == "pencil_1");
  }

  TEST_CASE("plain paragraph is one base segment") {
    auto doc = parse_tei(tei("", "<p>abc</p>"));
    REQUIRE(doc.segments.size() == 1);
    CHECK(doc.segments[0].text == "abc");
    CHECK(doc.segments[0].kind == SegmentKind::Base);
    CHECK_FALSE(doc.segments[0].span_group.has_value());
  }

  TEST_CASE("deletion inside a paragraph keeps document order") {
    auto doc = parse_tei(tei(kHands,
                             "<p>Meine arme Mutter <del hand=\"#ink\">leidet schon seit längerer "
                             "Zeit</del> ist wohlauf.</p>"));
    REQUIRE(doc.segments.size() == 3);
    CHECK(doc.segments[0].kind == SegmentKind::Base);
    CHECK(doc.segments[0].text == "Meine arme Mutter ");
    CHECK(doc.segments[1].kind == SegmentKind::Deleted);
    CHECK(doc.segments[1].text == "leidet schon seit längerer Zeit");
    CHECK(doc.segments[1].hand_scribe == Scribe::Author);
    CHECK(doc.segments[2].kind == SegmentKind::Base);
    CHECK(doc.segments[2].text == " ist wohlauf.");
  }

  TEST_CASE("header metadata") {
    auto doc = parse_tei(tei("", "<p>x</p>"));
    CHECK(doc.doc_id == "doc1");
    CHECK(doc.author == "Ingeborg Muster");
    CHECK(doc.addressee == "Max Beispiel");
    CHECK(doc.date == "1921-05-03");
  }

  TEST_CASE("fallback id when the root has none") {
    auto doc = parse_tei("<TEI><text><body><p>x</p></body></text></TEI>", "letter7");
    CHECK(doc.doc_id == "letter7");
  }

  TEST_CASE("adjacent del and add form one replacement group") {
    auto doc = parse_tei(tei(kHands,
                             "<p>Geschichte <del hand=\"#ink\">wuürde</del> <add hand=\"#ink\">würde</add> "
                             "lang <add hand=\"#ink\">sehr</add></p>"));
    std::vector<TextSegment> alts;
    for (const auto& s : doc.segments)
      if (s.kind != SegmentKind::Base) alts.push_back(s);
    REQUIRE(alts.size() == 3);
    CHECK(alts[0].span_group == alts[1].span_group);
    CHECK(alts[2].span_group != alts[0].span_group);
  }

  TEST_CASE("hand resolution") {
    SUBCASE("no hand attribute means the author") {
      auto doc = parse_tei(tei(kHands, "<p><add>x</add></p>"));
      CHECK(doc.segments[0].hand_scribe == Scribe::Author);
    }
    SUBCASE("undeclared hand is unknown") {
      auto doc = parse_tei(tei(kHands, "<p><add hand=\"#pencil_2\">99</add></p>"));
      CHECK(doc.segments[0].hand_scribe == Scribe::Unknown);
    }
    SUBCASE("handNote without scribe is unknown") {
      auto doc = parse_tei(tei("<handNote xml:id=\"p\"/>", "<p><add hand=\"#p\">99</add></p>"));
      CHECK(doc.segments[0].hand_scribe == Scribe::Unknown);
    }
    SUBCASE("resp without hand is an editor") {
      auto doc = parse_tei(tei(kHands, "<p><note resp=\"#ed\">sic</note> x</p>"));
      CHECK(doc.segments[0].hand_scribe == Scribe::Editor);
    }
  }

  TEST_CASE("line breaks separate text") {
    auto doc = parse_tei(tei("", "<p>ab<lb/>cd</p>"));
    REQUIRE(doc.segments.size() == 2);
    CHECK(doc.segments[0].text == "ab");
    CHECK(doc.segments[1].text == "cd");
  }

  TEST_CASE("unknown elements are transparent with a warning") {
    auto doc = parse_tei(tei("", "<p>a <gloss>b</gloss> c</p>"));
    REQUIRE(doc.segments.size() == 1);
    CHECK(doc.segments[0].text == "a b c");
    REQUIRE(doc.warnings.size() == 1);
    CHECK(doc.warnings[0].find("gloss") != std::string::npos);
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(parse_tei("<TEI><text><body><p>x</body></TEI>"), Error);
    try {
      parse_tei("<TEI><text><body><p>x</body></TEI>");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::MalformedXml);
      CHECK(e.module() == "corpus-ingest");
    }
    try {
      parse_tei("<TEI><teiHeader/></TEI>");
      FAIL("expected MissingBody");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::MissingBody);
    }
    try {
      parse_tei("<TEI><text><body><p>  </p></body></text></TEI>");
      FAIL("expected MissingBody");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::MissingBody);
    }
  }

  TEST_CASE("every fixture file parses") {
    int files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(testing_support::fixture_dir() / "tei")) {
      auto doc = parse_tei_file(entry.path());
      CHECK(doc.doc_id == entry.path().stem().string());
      CHECK(doc.warnings.empty());
      ++files;
    }
    CHECK(files == 20);
  }
}

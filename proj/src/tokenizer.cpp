#include "alterlda/tokenizer.hpp"

#include <unicode/brkiter.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <map>
#include <memory>

#include "alterlda/error.hpp"

namespace alterlda {

namespace {

std::unique_ptr<icu::BreakIterator> make_word_iterator() {
  UErrorCode status = U_ZERO_ERROR;
  std::unique_ptr<icu::BreakIterator> it(
      icu::BreakIterator::createWordInstance(icu::Locale::getRoot(), status));
  if (U_FAILURE(status))
    throw Error(ErrorKind::InvalidArgument, "corpus-ingest",
                std::string("ICU word iterator unavailable: ") + u_errorName(status));
  return it;
}

bool is_space_run(const icu::UnicodeString& s) {
  for (int32_t i = 0; i < s.length();) {
    UChar32 cp = s.char32At(i);
    if (!u_isUWhiteSpace(cp)) return false;
    i += U16_LENGTH(cp);
  }
  return true;
}

}  // namespace

std::vector<std::string> split_words(std::string_view text, bool keep_punct) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  icu::UnicodeString ustr = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  thread_local std::unique_ptr<icu::BreakIterator> it = make_word_iterator();
  it->setText(ustr);
  int32_t start = it->first();
  for (int32_t end = it->next(); end != icu::BreakIterator::DONE; start = end, end = it->next()) {
    const bool word = it->getRuleStatus() != UBRK_WORD_NONE;
    icu::UnicodeString piece = ustr.tempSubStringBetween(start, end);
    if (!word && (!keep_punct || is_space_run(piece))) continue;
    std::string utf8;
    piece.toUTF8String(utf8);
    out.push_back(std::move(utf8));
  }
  return out;
}

bool is_word_token(std::string_view token) {
  std::int32_t i = 0;
  const auto len = static_cast<std::int32_t>(token.size());
  const auto* bytes = reinterpret_cast<const std::uint8_t*>(token.data());
  while (i < len) {
    UChar32 cp;
    U8_NEXT(bytes, i, len, cp);
    if (cp >= 0 && (u_isalnum(cp) || u_hasBinaryProperty(cp, UCHAR_ALPHABETIC))) return true;
  }
  return false;
}

std::string fold_case(std::string_view text) {
  icu::UnicodeString ustr = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  ustr.foldCase();
  std::string out;
  ustr.toUTF8String(out);
  return out;
}

std::u32string to_code_points(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::int32_t i = 0;
  const auto len = static_cast<std::int32_t>(text.size());
  const auto* bytes = reinterpret_cast<const std::uint8_t*>(text.data());
  while (i < len) {
    UChar32 cp;
    U8_NEXT(bytes, i, len, cp);
    out.push_back(cp < 0 ? U'�' : static_cast<char32_t>(cp));
  }
  return out;
}

TokenizedDocument tokenize(const RawDocument& doc, const TokenizerConfig& cfg) {
  TokenizedDocument out;
  out.doc_id = doc.doc_id;
  out.author = doc.author;
  out.addressee = doc.addressee;
  out.date = doc.date;

  std::map<int, AlterationSpan> spans;
  for (const TextSegment& seg : doc.segments) {
    if (seg.kind != SegmentKind::Note) {
      for (std::string& word : split_words(seg.text, cfg.keep_punct)) {
        if (cfg.stopwords.count(word) > 0) continue;
        Token tok;
        tok.surface = std::move(word);
        tok.alt_flag = seg.kind == SegmentKind::Base ? 0 : 1;
        tok.span_id = seg.span_group;
        out.tokens.push_back(std::move(tok));
      }
    }
    if (!seg.span_group || seg.kind == SegmentKind::Base) continue;

    auto [it, fresh] = spans.try_emplace(*seg.span_group);
    AlterationSpan& span = it->second;
    if (fresh) {
      span.span_id = *seg.span_group;
      span.doc_id = doc.doc_id;
      span.hand_scribe = seg.hand_scribe.value_or(Scribe::Unknown);
    }
    std::vector<std::string> words = split_words(seg.text, true);
    if (seg.kind == SegmentKind::Deleted) {
      span.before_tokens.insert(span.before_tokens.end(), words.begin(), words.end());
    } else {
      // The adding hand attributes a replacement.
      if (span.after_tokens.empty()) span.hand_scribe = seg.hand_scribe.value_or(Scribe::Unknown);
      span.after_tokens.insert(span.after_tokens.end(), words.begin(), words.end());
      if (seg.kind == SegmentKind::Note) {
        span.from_note = true;
        span.note_type = seg.note_type;
      }
    }
  }
  for (auto& [id, span] : spans) {
    if (span.before_tokens.empty() && span.after_tokens.empty()) continue;
    out.spans.push_back(std::move(span));
  }
  return out;
}

}  // namespace alterlda

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace alterlda {

enum class SegmentKind { Base, Added, Deleted, Note };

/// Who wrote a hand, as declared by the `scribe` attribute of its handNote.
enum class Scribe { Author, Archivist, Editor, Unknown };

std::string_view to_string(SegmentKind kind) noexcept;
std::string_view to_string(Scribe scribe) noexcept;
Scribe scribe_from_string(std::string_view text) noexcept;

struct TextSegment {
  std::string text;
  SegmentKind kind = SegmentKind::Base;
  std::optional<std::string> hand_id;
  std::optional<Scribe> hand_scribe;
  std::optional<std::string> note_type;
  // Shared by every segment of one alteration; a del/add pair that are
  // adjacent siblings (a replacement) share one group.
  std::optional<int> span_group;

  bool operator==(const TextSegment&) const = default;
};

struct RawDocument {
  std::string doc_id;
  std::string author;
  std::optional<std::string> addressee;
  std::optional<std::string> date;
  std::vector<TextSegment> segments;
  std::vector<std::string> warnings;
};

/// Parses one TEI document. Only body text becomes segments; add/del/note
/// are interpreted, hi/p/seg and other containers are transparent, and
/// unrecognised elements are descended into with a warning. `fallback_id`
/// names the document when the root carries no xml:id.
///
/// Throws Error{MalformedXml} on unparseable input and Error{MissingBody}
/// when there is no body or it holds no text.
RawDocument parse_tei(std::string_view xml, std::string_view fallback_id = {});

RawDocument parse_tei_file(const std::filesystem::path& path);

}  // namespace alterlda

#include "alterlda/tei.hpp"

#include <expat.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "alterlda/error.hpp"

namespace alterlda {

std::string_view to_string(SegmentKind kind) noexcept {
  switch (kind) {
    case SegmentKind::Base: return "Base";
    case SegmentKind::Added: return "Added";
    case SegmentKind::Deleted: return "Deleted";
    case SegmentKind::Note: return "Note";
  }
  return "Base";
}

std::string_view to_string(Scribe scribe) noexcept {
  switch (scribe) {
    case Scribe::Author: return "Author";
    case Scribe::Archivist: return "Archivist";
    case Scribe::Editor: return "Editor";
    case Scribe::Unknown: return "Unknown";
  }
  return "Unknown";
}

Scribe scribe_from_string(std::string_view text) noexcept {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "author") return Scribe::Author;
  if (lower == "archivist") return Scribe::Archivist;
  if (lower == "editor") return Scribe::Editor;
  return Scribe::Unknown;
}

namespace {

constexpr std::string_view kModule = "corpus-ingest";

// Elements that end a run of text: text on either side never joins into one word.
constexpr std::array<std::string_view, 22> kBlockElements = {
    "p",    "div",    "ab",     "head",   "l",     "lg",        "lb",   "pb",
    "cb",   "opener", "closer", "salute", "signed", "dateline", "postscript",
    "list", "item",   "table",  "row",    "cell",  "fw",        "body"};

// Interpreted or known-transparent body elements; anything else warns.
constexpr std::array<std::string_view, 13> kTransparentElements = {
    "hi", "seg", "subst", "choice", "sic", "corr", "orig", "reg",
    "persName", "placeName", "date", "name", "unclear"};

bool contains(auto const& table, std::string_view name) {
  return std::find(table.begin(), table.end(), name) != table.end();
}

std::string_view local_name(std::string_view name) {
  auto colon = name.rfind(':');
  return colon == std::string_view::npos ? name : name.substr(colon + 1);
}

bool is_blank(std::string_view text) {
  return std::all_of(text.begin(), text.end(),
                     [](unsigned char ch) { return std::isspace(ch) != 0; });
}

std::string trim(std::string_view text) {
  auto begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  auto end = text.find_last_not_of(" \t\r\n");
  // Collapse inner whitespace runs for metadata values.
  std::string out;
  bool space = false;
  for (char ch : text.substr(begin, end - begin + 1)) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      space = true;
    } else {
      if (space) out.push_back(' ');
      space = false;
      out.push_back(ch);
    }
  }
  return out;
}

struct Alteration {
  SegmentKind kind;
  std::optional<std::string> hand_id;
  bool resp = false;  // note/add carrying a resp attribute but no hand
  std::optional<std::string> note_type;
  int span;
};

struct Frame {
  std::string name;
  std::optional<Alteration> alteration;
  // Last add/del child closed in this frame, for replacement linking.
  std::optional<std::pair<SegmentKind, int>> last_alteration;
};

class TeiHandler {
 public:
  explicit TeiHandler(std::string_view fallback_id) { doc_.doc_id = std::string(fallback_id); }

  void start(std::string_view raw_name, const XML_Char** attrs) {
    std::string_view name = local_name(raw_name);
    std::map<std::string, std::string, std::less<>> attr;
    for (int i = 0; attrs[i] != nullptr; i += 2) attr.emplace(attrs[i], attrs[i + 1]);

    if (frames_.empty()) {
      if (auto it = attr.find("xml:id"); it != attr.end() && !it->second.empty())
        doc_.doc_id = it->second;
    }
    if (name == "teiHeader") ++header_depth_;
    if (header_depth_ > 0) {
      header_start(name, attr);
      frames_.push_back(Frame{std::string(name), std::nullopt, std::nullopt});
      return;
    }
    if (name == "body" && body_depth_ == 0) {
      saw_body_ = true;
    }
    if (name == "body" || body_depth_ > 0) ++body_depth_;

    Frame frame{std::string(name), std::nullopt, std::nullopt};
    if (body_depth_ > 0) {
      Frame& parent = frames_.back();
      const bool is_add = name == "add";
      const bool is_del = name == "del";
      if (is_add || is_del || name == "note") {
        Alteration alt;
        alt.kind = is_add ? SegmentKind::Added : is_del ? SegmentKind::Deleted : SegmentKind::Note;
        if (auto it = attr.find("hand"); it != attr.end() && !it->second.empty()) {
          std::string_view hand = it->second;
          if (hand.front() == '#') hand.remove_prefix(1);
          alt.hand_id = std::string(hand);
        }
        alt.resp = attr.count("resp") > 0;
        if (auto it = attr.find("type"); it != attr.end() && alt.kind == SegmentKind::Note)
          alt.note_type = it->second;

        const Alteration* outer = current_alteration();
        if (outer != nullptr) {
          // Nested alteration: innermost kind, outer span.
          alt.span = outer->span;
          if (!alt.hand_id) alt.hand_id = outer->hand_id;
        } else if (alt.kind != SegmentKind::Note && parent.last_alteration &&
                   parent.last_alteration->first != alt.kind) {
          alt.span = parent.last_alteration->second;
        } else {
          alt.span = next_span_++;
        }
        frame.alteration = alt;
      } else {
        parent.last_alteration.reset();
        if (!contains(kBlockElements, name) && !contains(kTransparentElements, name)) {
          if (warned_.insert(std::string(name)).second)
            doc_.warnings.push_back("unknown element <" + std::string(name) +
                                    "> treated as transparent");
        }
      }
      bool joins_word = name == "lb" && attr.count("break") > 0 && attr.at("break") == "no";
      if (contains(kBlockElements, name) && !joins_word) run_break_ = true;
    }
    frames_.push_back(std::move(frame));
  }

  void end(std::string_view raw_name) {
    std::string_view name = local_name(raw_name);
    Frame frame = std::move(frames_.back());
    frames_.pop_back();
    if (header_depth_ > 0) {
      header_end(name);
      if (name == "teiHeader") --header_depth_;
      return;
    }
    if (body_depth_ > 0) {
      --body_depth_;
      if (contains(kBlockElements, name)) run_break_ = true;
      if (frame.alteration && !frames_.empty()) {
        Frame& parent = frames_.back();
        if (frame.alteration->kind == SegmentKind::Note || current_alteration() != nullptr) {
          parent.last_alteration.reset();
        } else {
          parent.last_alteration = std::make_pair(frame.alteration->kind, frame.alteration->span);
        }
      }
    }
  }

  void text(std::string_view chunk) {
    if (header_depth_ > 0) {
      if (capture_) captured_.append(chunk);
      return;
    }
    if (body_depth_ == 0) return;
    if (!is_blank(chunk)) {
      frames_.back().last_alteration.reset();
      saw_text_ = true;
    }

    TextSegment seg;
    seg.text = std::string(chunk);
    if (const Alteration* alt = current_alteration()) {
      seg.kind = alt->kind;
      seg.hand_id = alt->hand_id;
      seg.note_type = alt->note_type;
      seg.span_group = alt->span;
      if (!alt->hand_id) seg.hand_scribe = alt->resp ? Scribe::Editor : Scribe::Author;
    }
    auto& segments = doc_.segments;
    if (!run_break_ && !segments.empty()) {
      TextSegment& last = segments.back();
      if (last.kind == seg.kind && last.hand_id == seg.hand_id &&
          last.hand_scribe == seg.hand_scribe && last.note_type == seg.note_type &&
          last.span_group == seg.span_group) {
        last.text += seg.text;
        return;
      }
    }
    run_break_ = false;
    segments.push_back(std::move(seg));
  }

  RawDocument finish() {
    if (!saw_body_ || !saw_text_)
      throw Error(ErrorKind::MissingBody, kModule,
                  "document '" + doc_.doc_id + "' has no transcription body");
    for (TextSegment& seg : doc_.segments) {
      if (!seg.hand_id) continue;
      auto it = hands_.find(*seg.hand_id);
      seg.hand_scribe = (it == hands_.end() || !it->second) ? Scribe::Unknown
                                                            : scribe_from_string(*it->second);
    }
    if (doc_.author.empty() && title_author_) doc_.author = *title_author_;
    if (doc_.doc_id.empty()) doc_.doc_id = "doc";
    return std::move(doc_);
  }

 private:
  const Alteration* current_alteration() const {
    for (auto it = frames_.rbegin(); it != frames_.rend(); ++it)
      if (it->alteration) return &*it->alteration;
    return nullptr;
  }

  void header_start(std::string_view name,
                    const std::map<std::string, std::string, std::less<>>& attr) {
    if (name == "handNote") {
      auto id = attr.find("xml:id");
      if (id != attr.end()) {
        auto scribe = attr.find("scribe");
        hands_[id->second] =
            scribe == attr.end() ? std::nullopt : std::optional<std::string>(scribe->second);
      }
    } else if (name == "correspAction") {
      auto type = attr.find("type");
      corresp_ = type == attr.end() ? std::string() : type->second;
    } else if (name == "persName" && !corresp_.empty()) {
      begin_capture();
    } else if (name == "author" && in_title_stmt_ && !title_author_) {
      begin_capture();
    } else if (name == "titleStmt") {
      in_title_stmt_ = true;
    } else if (name == "date" && corresp_ == "sent" && !doc_.date) {
      if (auto when = attr.find("when"); when != attr.end()) doc_.date = when->second;
    }
  }

  void header_end(std::string_view name) {
    if (name == "correspAction") {
      corresp_.clear();
    } else if (name == "titleStmt") {
      in_title_stmt_ = false;
    } else if (name == "persName" && capture_ && !corresp_.empty()) {
      std::string value = trim(captured_);
      if (corresp_ == "sent" && doc_.author.empty()) doc_.author = value;
      if (corresp_ == "received" && !doc_.addressee) doc_.addressee = value;
      capture_ = false;
    } else if (name == "author" && capture_) {
      title_author_ = trim(captured_);
      capture_ = false;
    }
  }

  void begin_capture() {
    capture_ = true;
    captured_.clear();
  }

  RawDocument doc_;
  std::vector<Frame> frames_;
  std::map<std::string, std::optional<std::string>, std::less<>> hands_;
  std::set<std::string, std::less<>> warned_;
  int header_depth_ = 0;
  int body_depth_ = 0;
  int next_span_ = 0;
  bool saw_body_ = false;
  bool saw_text_ = false;
  bool run_break_ = true;
  bool in_title_stmt_ = false;
  bool capture_ = false;
  std::string captured_;
  std::string corresp_;
  std::optional<std::string> title_author_;
};

void XMLCALL on_start(void* data, const XML_Char* name, const XML_Char** attrs) {
  static_cast<TeiHandler*>(data)->start(name, attrs);
}

void XMLCALL on_end(void* data, const XML_Char* name) {
  static_cast<TeiHandler*>(data)->end(name);
}

void XMLCALL on_text(void* data, const XML_Char* text, int len) {
  static_cast<TeiHandler*>(data)->text(std::string_view(text, static_cast<std::size_t>(len)));
}

struct ParserDeleter {
  void operator()(XML_Parser parser) const { XML_ParserFree(parser); }
};

}  // namespace

RawDocument parse_tei(std::string_view xml, std::string_view fallback_id) {
  std::unique_ptr<std::remove_pointer_t<XML_Parser>, ParserDeleter> parser(
      XML_ParserCreate("UTF-8"));
  TeiHandler handler(fallback_id);
  XML_SetUserData(parser.get(), &handler);
  XML_SetElementHandler(parser.get(), on_start, on_end);
  XML_SetCharacterDataHandler(parser.get(), on_text);

  if (XML_Parse(parser.get(), xml.data(), static_cast<int>(xml.size()), XML_TRUE) ==
      XML_STATUS_ERROR) {
    std::ostringstream msg;
    msg << XML_ErrorString(XML_GetErrorCode(parser.get())) << " at line "
        << XML_GetCurrentLineNumber(parser.get()) << ", column "
        << XML_GetCurrentColumnNumber(parser.get());
    throw Error(ErrorKind::MalformedXml, kModule, msg.str());
  }
  return handler.finish();
}

RawDocument parse_tei_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, kModule, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_tei(buf.str(), path.stem().string());
}

}  // namespace alterlda

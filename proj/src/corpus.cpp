#include "alterlda/corpus.hpp"

#include <fstream>
#include <istream>
#include <map>
#include "json.hpp"
#include <ostream>
#include <set>

#include "alterlda/error.hpp"

namespace alterlda {

namespace {

constexpr std::string_view kModule = "corpus-ingest";

using ojson = nlohmann::ordered_json;

ojson optional_json(const std::optional<std::string>& value) {
  return value ? ojson(*value) : ojson(nullptr);
}

std::optional<std::string> optional_string(const nlohmann::json& value) {
  if (value.is_null()) return std::nullopt;
  return value.get<std::string>();
}

ojson span_to_json(const AlterationSpan& span) {
  ojson j;
  j["span_id"] = span.span_id;
  j["hand_scribe"] = to_string(span.hand_scribe);
  j["from_note"] = span.from_note;
  j["note_type"] = optional_json(span.note_type);
  j["before"] = span.before_tokens;
  j["after"] = span.after_tokens;
  j["category"] = to_string(span.category());
  return j;
}

AlterationSpan span_from_json(const nlohmann::json& j, const std::string& doc_id) {
  AlterationSpan span;
  span.span_id = j.at("span_id").get<int>();
  span.doc_id = doc_id;
  span.hand_scribe = scribe_from_string(j.at("hand_scribe").get<std::string>());
  span.from_note = j.value("from_note", false);
  if (j.contains("note_type")) span.note_type = optional_string(j.at("note_type"));
  span.before_tokens = j.at("before").get<std::vector<std::string>>();
  span.after_tokens = j.at("after").get<std::vector<std::string>>();
  Category category = category_from_string(j.value("category", std::string("Unclassified")));
  if (category != Category::Unclassified) span.assign(category);
  return span;
}

}  // namespace

int Vocabulary::intern(std::string_view surface) {
  auto [it, fresh] = ids_.try_emplace(std::string(surface), static_cast<int>(words_.size()));
  if (fresh) words_.push_back(it->first);
  return it->second;
}

std::optional<int> Vocabulary::find(std::string_view surface) const {
  auto it = ids_.find(std::string(surface));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::uint64_t Vocabulary::hash() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](unsigned char byte) {
    h ^= byte;
    h *= 0x100000001b3ULL;
  };
  for (const std::string& w : words_) {
    for (unsigned char ch : w) mix(ch);
    mix('\n');
  }
  return h;
}

std::size_t Corpus::total_tokens() const noexcept {
  std::size_t total = 0;
  for (const auto& doc : documents) total += doc.tokens.size();
  return total;
}

std::string metadata_value(const TokenizedDocument& doc, std::string_view key) {
  if (key == "author") return doc.author;
  if (key == "addressee") return doc.addressee.value_or("");
  if (key == "date") return doc.date.value_or("");
  if (key == "doc_id") return doc.doc_id;
  throw Error(ErrorKind::UnknownMetadataKey, kModule, "unknown metadata key '" + std::string(key) + "'");
}

Corpus build_corpus(std::vector<TokenizedDocument> docs) {
  Corpus corpus;
  std::set<std::string, std::less<>> seen;
  for (auto& doc : docs) {
    if (!seen.insert(doc.doc_id).second)
      throw Error(ErrorKind::DuplicateDocId, kModule, "duplicate doc_id '" + doc.doc_id + "'");
    for (Token& tok : doc.tokens) tok.vocab_id = corpus.vocabulary.intern(tok.surface);
  }
  corpus.documents = std::move(docs);
  return corpus;
}

Corpus make_corpus(std::vector<TokenizedDocument> docs, Vocabulary vocabulary) {
  const auto v = static_cast<int>(vocabulary.size());
  for (const auto& doc : docs)
    for (const Token& tok : doc.tokens)
      if (tok.vocab_id < 0 || tok.vocab_id >= v)
        throw Error(ErrorKind::VocabularyMismatch, kModule,
                    "token '" + tok.surface + "' in '" + doc.doc_id + "' has id " +
                        std::to_string(tok.vocab_id) + " outside vocabulary of size " +
                        std::to_string(v));
  return Corpus{std::move(docs), std::move(vocabulary)};
}

void apply_span_categories(Corpus& corpus) {
  for (auto& doc : corpus.documents) {
    std::map<int, Category> categories;
    for (const auto& span : doc.spans) categories[span.span_id] = span.category();
    for (Token& tok : doc.tokens) {
      if (!tok.span_id) continue;
      auto it = categories.find(*tok.span_id);
      if (it == categories.end()) continue;
      tok.alt_flag = (it->second == Category::ContentRelated ||
                      it->second == Category::Unclassified)
                         ? 1
                         : 0;
    }
  }
}

void write_corpus_jsonl(const Corpus& corpus, std::ostream& docs, std::ostream& vocab) {
  for (const auto& doc : corpus.documents) {
    ojson j;
    j["doc_id"] = doc.doc_id;
    j["author"] = doc.author;
    j["addressee"] = optional_json(doc.addressee);
    j["date"] = optional_json(doc.date);
    ojson tokens = ojson::array();
    for (const Token& tok : doc.tokens) {
      tokens.push_back(ojson::array({tok.surface, tok.vocab_id, tok.alt_flag,
                                     tok.span_id ? ojson(*tok.span_id) : ojson(nullptr)}));
    }
    j["tokens"] = std::move(tokens);
    ojson spans = ojson::array();
    for (const auto& span : doc.spans) spans.push_back(span_to_json(span));
    j["spans"] = std::move(spans);
    docs << j.dump() << '\n';
  }
  for (const std::string& w : corpus.vocabulary.words()) vocab << w << '\n';
}

Corpus read_corpus_jsonl(std::istream& docs, std::istream* vocab) {
  std::vector<TokenizedDocument> documents;
  std::map<int, std::string> seen_ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(docs, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      auto j = nlohmann::json::parse(line);
      TokenizedDocument doc;
      doc.doc_id = j.at("doc_id").get<std::string>();
      doc.author = j.value("author", std::string());
      if (j.contains("addressee")) doc.addressee = optional_string(j.at("addressee"));
      if (j.contains("date")) doc.date = optional_string(j.at("date"));
      for (const auto& t : j.at("tokens")) {
        Token tok;
        tok.surface = t.at(0).get<std::string>();
        tok.vocab_id = t.at(1).get<int>();
        tok.alt_flag = t.at(2).get<std::uint8_t>();
        if (t.size() > 3 && !t.at(3).is_null()) tok.span_id = t.at(3).get<int>();
        if (tok.alt_flag > 1) throw Error(ErrorKind::FormatError, kModule, "alt_flag not in {0,1}");
        auto [it, fresh] = seen_ids.try_emplace(tok.vocab_id, tok.surface);
        if (!fresh && it->second != tok.surface)
          throw Error(ErrorKind::FormatError, kModule,
                      "vocab id " + std::to_string(tok.vocab_id) + " names two surfaces");
        doc.tokens.push_back(std::move(tok));
      }
      if (j.contains("spans"))
        for (const auto& s : j.at("spans")) doc.spans.push_back(span_from_json(s, doc.doc_id));
      documents.push_back(std::move(doc));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::FormatError, kModule,
                  "corpus line " + std::to_string(line_no) + ": " + e.what());
    }
  }

  Vocabulary vocabulary;
  if (vocab != nullptr) {
    while (std::getline(*vocab, line)) vocabulary.intern(line);
  } else {
    int expected = 0;
    for (const auto& [id, surface] : seen_ids) {
      if (id != expected++)
        throw Error(ErrorKind::FormatError, kModule,
                    "vocabulary ids are not dense and no sidecar was given");
      vocabulary.intern(surface);
    }
  }
  for (const auto& [id, surface] : seen_ids) {
    if (id < 0 || static_cast<std::size_t>(id) >= vocabulary.size() ||
        vocabulary.word(id) != surface)
      throw Error(ErrorKind::VocabularyMismatch, kModule,
                  "token '" + surface + "' disagrees with the vocabulary at id " +
                      std::to_string(id));
  }
  std::set<std::string, std::less<>> ids;
  for (const auto& doc : documents)
    if (!ids.insert(doc.doc_id).second)
      throw Error(ErrorKind::DuplicateDocId, kModule, "duplicate doc_id '" + doc.doc_id + "'");
  return Corpus{std::move(documents), std::move(vocabulary)};
}

std::filesystem::path vocab_sidecar(const std::filesystem::path& corpus_path) {
  return std::filesystem::path(corpus_path.string() + ".vocab");
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
  std::ofstream docs(path, std::ios::binary);
  std::ofstream vocab(vocab_sidecar(path), std::ios::binary);
  if (!docs || !vocab) throw Error(ErrorKind::IoError, kModule, "cannot write " + path.string());
  write_corpus_jsonl(corpus, docs, vocab);
}

Corpus load_corpus(const std::filesystem::path& path) {
  std::ifstream docs(path, std::ios::binary);
  if (!docs) throw Error(ErrorKind::IoError, kModule, "cannot read corpus " + path.string());
  std::ifstream vocab(vocab_sidecar(path), std::ios::binary);
  return read_corpus_jsonl(docs, vocab ? &vocab : nullptr);
}

}  // namespace alterlda

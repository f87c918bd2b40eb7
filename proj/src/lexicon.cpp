#include "alterlda/lexicon.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "alterlda/error.hpp"
#include "alterlda/tokenizer.hpp"

namespace alterlda {

namespace {
constexpr std::string_view kModule = "rule-classifier";

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}
}  // namespace

void LemmaDictionary::add(std::string surface, std::string lemma, std::optional<std::string> pos) {
  if (auto it = entries_.find(surface); it != entries_.end()) {
    if (it->second.lemma != lemma || it->second.pos != pos)
      throw Error(ErrorKind::FormatError, kModule,
                  "surface form '" + surface + "' has two dictionary entries");
    return;
  }
  if (pos) has_pos_ = true;
  lemmas_.insert(lemma);
  order_.push_back(surface);
  entries_.emplace(std::move(surface), LemmaEntry{std::move(lemma), std::move(pos)});
  candidates_ready_ = false;
}

const LemmaEntry* LemmaDictionary::lookup(std::string_view surface) const {
  auto it = entries_.find(std::string(surface));
  return it == entries_.end() ? nullptr : &it->second;
}

std::string LemmaDictionary::lemma_of(std::string_view surface) const {
  const LemmaEntry* entry = lookup(surface);
  return entry ? entry->lemma : std::string(surface);
}

const std::vector<LemmaDictionary::Candidate>& LemmaDictionary::candidates() const {
  if (candidates_ready_) return candidates_;
  candidates_.clear();
  std::set<std::string, std::less<>> seen;
  for (const std::string& surface : order_) {
    seen.insert(surface);
    candidates_.push_back({surface, to_code_points(surface), entries_.at(surface).lemma});
  }
  for (const std::string& lemma : lemmas_) {
    if (seen.insert(lemma).second) candidates_.push_back({lemma, to_code_points(lemma), lemma});
  }
  candidates_ready_ = true;
  return candidates_;
}

LemmaDictionary LemmaDictionary::read(std::istream& in) {
  LemmaDictionary dict;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto fields = split_tabs(line);
    if (fields.size() < 2 || fields.size() > 3 || fields[0].empty() || fields[1].empty())
      throw Error(ErrorKind::FormatError, kModule,
                  "dictionary line " + std::to_string(line_no) + ": expected surface<TAB>lemma[<TAB>pos]");
    std::optional<std::string> pos;
    if (fields.size() == 3 && !fields[2].empty()) pos = fields[2];
    dict.add(fields[0], fields[1], pos);
  }
  return dict;
}

LemmaDictionary LemmaDictionary::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, kModule, "cannot read dictionary " + path.string());
  return read(in);
}

void WordVectors::add(std::string_view word, std::vector<double> vec) {
  if (vec.size() != dims_)
    throw Error(ErrorKind::DimensionMismatch, kModule,
                "vector for '" + std::string(word) + "' has " + std::to_string(vec.size()) +
                    " components, expected " + std::to_string(dims_));
  vectors_.try_emplace(fold_case(word), std::move(vec));
}

const std::vector<double>* WordVectors::lookup(std::string_view word) const {
  auto it = vectors_.find(fold_case(word));
  return it == vectors_.end() ? nullptr : &it->second;
}

std::optional<std::vector<double>> WordVectors::mean(const std::vector<std::string>& words) const {
  std::vector<double> sum(dims_, 0.0);
  std::size_t known = 0;
  for (const auto& w : words) {
    const auto* vec = lookup(w);
    if (vec == nullptr) continue;
    for (std::size_t i = 0; i < dims_; ++i) sum[i] += (*vec)[i];
    ++known;
  }
  if (known == 0) return std::nullopt;
  for (double& x : sum) x /= static_cast<double>(known);
  return sum;
}

WordVectors WordVectors::read(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw Error(ErrorKind::FormatError, kModule, "vector file is empty");
  std::istringstream header(line);
  std::size_t count = 0;
  std::size_t dims = 0;
  if (!(header >> count >> dims) || dims == 0)
    throw Error(ErrorKind::FormatError, kModule, "vector header must be '<count> <dims>'");
  WordVectors vecs(dims);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string word;
    fields >> word;
    std::vector<double> vec;
    std::string value;
    while (fields >> value) {
      try {
        vec.push_back(std::stod(value));
      } catch (const std::exception&) {
        throw Error(ErrorKind::FormatError, kModule,
                    "non-numeric component '" + value + "' for '" + word + "'");
      }
    }
    vecs.add(word, std::move(vec));
    ++rows;
  }
  if (rows != count)
    throw Error(ErrorKind::DimensionMismatch, kModule,
                "header announces " + std::to_string(count) + " vectors, file has " +
                    std::to_string(rows));
  return vecs;
}

WordVectors WordVectors::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, kModule, "cannot read vectors " + path.string());
  return read(in);
}

std::optional<double> cosine_distance(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size())
    throw Error(ErrorKind::DimensionMismatch, kModule, "cosine of vectors of unequal length");
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return std::nullopt;
  return 1.0 - dot / (std::sqrt(na) * std::sqrt(nb));
}

}  // namespace alterlda

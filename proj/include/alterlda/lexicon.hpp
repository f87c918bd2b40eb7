#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace alterlda {

struct LemmaEntry {
  std::string lemma;
  std::optional<std::string> pos;
};

/// Surface form -> (lemma, optional coarse POS). File format: one
/// `surface<TAB>lemma[<TAB>pos]` entry per line; `#` starts a comment line.
class LemmaDictionary {
 public:
  /// A candidate for fuzzy matching: every surface form and every lemma.
  struct Candidate {
    std::string text;
    std::u32string code_points;
    std::string lemma;
  };

  /// Throws Error{FormatError} if `surface` is already mapped differently.
  void add(std::string surface, std::string lemma, std::optional<std::string> pos = {});

  const LemmaEntry* lookup(std::string_view surface) const;
  /// Forms absent from the dictionary lemmatize to themselves.
  std::string lemma_of(std::string_view surface) const;

  const std::set<std::string, std::less<>>& lemma_set() const noexcept { return lemmas_; }
  const std::vector<Candidate>& candidates() const;
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  bool has_pos() const noexcept { return has_pos_; }

  static LemmaDictionary read(std::istream& in);
  static LemmaDictionary load(const std::filesystem::path& path);

 private:
  std::unordered_map<std::string, LemmaEntry> entries_;
  std::vector<std::string> order_;
  std::set<std::string, std::less<>> lemmas_;
  bool has_pos_ = false;
  mutable std::vector<Candidate> candidates_;
  mutable bool candidates_ready_ = false;
};

/// Word embeddings in the common text format: a `<count> <dims>` header,
/// then `word v1 ... vd` per line. Keys are case-folded on load and lookup.
class WordVectors {
 public:
  WordVectors() = default;
  explicit WordVectors(std::size_t dims) : dims_(dims) {}

  /// Throws Error{DimensionMismatch} if `vec` does not have dims() entries.
  void add(std::string_view word, std::vector<double> vec);
  const std::vector<double>* lookup(std::string_view word) const;

  /// Mean of the vectors of known words; nullopt when none is known.
  std::optional<std::vector<double>> mean(const std::vector<std::string>& words) const;

  std::size_t dims() const noexcept { return dims_; }
  std::size_t size() const noexcept { return vectors_.size(); }

  static WordVectors read(std::istream& in);
  static WordVectors load(const std::filesystem::path& path);

 private:
  std::size_t dims_ = 0;
  std::unordered_map<std::string, std::vector<double>> vectors_;
};

/// 1 - cosine similarity; nullopt if either vector has zero norm.
std::optional<double> cosine_distance(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace alterlda

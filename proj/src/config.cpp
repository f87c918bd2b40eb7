#include "alterlda/config.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>

#include "alterlda/error.hpp"

namespace alterlda {

namespace {

constexpr std::string_view kModule = "cli-reporting";

const std::map<std::string, std::vector<std::string>, std::less<>>& key_table() {
  static const std::map<std::string, std::vector<std::string>, std::less<>> table{
      {"ingest", {"in", "out", "keep-punct", "stopwords", "seed"}},
      {"classify",
       {"corpus", "dict", "vectors", "max-dist", "style-threshold", "paratext-unknown-hand",
        "patterns", "out", "out-corpus", "serial", "seed"}},
      {"train",
       {"corpus", "k", "alpha", "eta", "xi", "sweeps", "burn-in", "thin", "single-sample", "seed",
        "split", "test-fraction", "out"}},
      {"suggest",
       {"model", "corpus", "threshold", "fold-sweeps", "fold-burn-in", "group-by", "top", "docs",
        "seed", "out", "format", "serial"}},
      {"eval",
       {"model", "corpus", "threshold", "fold-sweeps", "fold-burn-in", "group-by", "seed", "out",
        "format", "serial"}},
      {"synth",
       {"grid-alpha", "grid-eta", "grid-xi", "sizes", "runs", "seed", "k", "vocab", "doc-length",
        "sweeps", "burn-in", "flag-rule", "flag-threshold", "out", "format", "serial"}},
      {"report", {"in", "out", "format", "seed"}},
  };
  return table;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::string normalize_key(std::string key) {
  std::replace(key.begin(), key.end(), '_', '-');
  return key;
}

[[noreturn]] void fail(std::string_view source, int line, const std::string& what) {
  throw Error(ErrorKind::ConfigError, kModule,
              std::string(source) + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

const std::vector<std::string>& config_sections() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, keys] : key_table()) out.push_back(name);
    return out;
  }();
  return names;
}

const std::vector<std::string>& config_keys(std::string_view section) {
  auto it = key_table().find(section);
  if (it == key_table().end())
    throw Error(ErrorKind::ConfigError, kModule, "unknown section '" + std::string(section) + "'");
  return it->second;
}

const std::vector<std::string>& global_config_keys() {
  static const std::vector<std::string> keys{"seed"};
  return keys;
}

RunConfig RunConfig::parse(std::istream& in, std::string_view source) {
  RunConfig cfg;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#' || line.front() == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(source, line_no, "unterminated section header");
      const std::string name = trim(std::string_view(line).substr(1, line.size() - 2));
      if (!key_table().contains(name)) fail(source, line_no, "unknown section '" + name + "'");
      if (cfg.find(name) != nullptr) fail(source, line_no, "section '" + name + "' repeated");
      cfg.sections.push_back({name, {}, line_no});
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(source, line_no, "expected 'key = value'");
    const std::string key = normalize_key(trim(std::string_view(line).substr(0, eq)));
    std::string value = trim(std::string_view(line).substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
      value = value.substr(1, value.size() - 2);
    if (key.empty()) fail(source, line_no, "empty key");

    const auto& allowed =
        cfg.sections.empty() ? global_config_keys() : config_keys(cfg.sections.back().name);
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      fail(source, line_no,
           "unknown key '" + key + "'" +
               (cfg.sections.empty() ? std::string(" outside any section")
                                     : " in section [" + cfg.sections.back().name + "]"));
    auto& entries = cfg.sections.empty() ? cfg.global : cfg.sections.back().entries;
    for (const Entry& e : entries)
      if (e.key == key) fail(source, line_no, "key '" + key + "' repeated (first on line " +
                                                  std::to_string(e.line) + ")");
    entries.push_back({key, value, line_no});
  }
  return cfg;
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, kModule, "cannot read config " + path.string());
  return parse(in, path.string());
}

const RunConfig::Section* RunConfig::find(std::string_view name) const {
  for (const auto& s : sections)
    if (s.name == name) return &s;
  return nullptr;
}

std::vector<std::string> RunConfig::arguments(std::string_view section) const {
  std::vector<std::string> args;
  const auto& allowed = config_keys(section);
  for (const Entry& e : global)
    if (std::find(allowed.begin(), allowed.end(), e.key) != allowed.end())
      args.push_back("--" + e.key + "=" + e.value);
  if (const Section* s = find(section))
    for (const Entry& e : s->entries) args.push_back("--" + e.key + "=" + e.value);
  return args;
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h) noexcept {
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace alterlda

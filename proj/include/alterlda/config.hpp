#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace alterlda {

/// A `key = value` file. Keys before the first `[section]` header are
/// global and apply to every section. `#` and `;` start comment lines.
struct RunConfig {
  struct Entry {
    std::string key;
    std::string value;
    int line = 0;
  };
  struct Section {
    std::string name;
    std::vector<Entry> entries;
    int line = 0;
  };

  std::vector<Entry> global;
  std::vector<Section> sections;  // file order

  /// Throws Error{ConfigError} naming the line for syntax errors, unknown
  /// sections, unknown keys and repeated sections.
  static RunConfig parse(std::istream& in, std::string_view source = "config");
  static RunConfig load(const std::filesystem::path& path);

  const Section* find(std::string_view name) const;

  /// `--key=value` arguments for `section`: globals first, section entries
  /// after, so section values win under last-one-wins parsing.
  std::vector<std::string> arguments(std::string_view section) const;
};

/// Keys accepted in each section; also used by the CLI to register flags.
const std::vector<std::string>& config_sections();
const std::vector<std::string>& config_keys(std::string_view section);
const std::vector<std::string>& global_config_keys();

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h = 0xcbf29ce484222325ULL) noexcept;

}  // namespace alterlda

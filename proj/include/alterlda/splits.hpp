#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "alterlda/corpus.hpp"

namespace alterlda {

enum class SplitSetting { S1, S2, S3 };

std::string_view to_string(SplitSetting setting) noexcept;
SplitSetting split_setting_from_string(std::string_view text);

struct SplitSpec {
  SplitSetting setting = SplitSetting::S1;
  std::optional<double> test_fraction;  // S3 only
  std::uint64_t seed = 0;

  /// Throws Error{InvalidArgument}: test_fraction in (0,1) iff S3.
  void validate() const;

  bool operator==(const SplitSpec&) const = default;
};

struct CorpusSplit {
  Corpus train;
  Corpus test;
};

/// S1: everything trains, nothing is held out.
/// S2: documents with an altered token train, the rest are the test set.
/// S3: altered documents only; each document's token positions are shuffled
///     and the first ceil((1 - f) * N) go to train, the rest to test.
/// Both halves share the input vocabulary. Throws Error{NoAlteredDocuments}
/// for S2/S3 when no document carries an alteration.
CorpusSplit split(const Corpus& corpus, const SplitSpec& spec);

}  // namespace alterlda

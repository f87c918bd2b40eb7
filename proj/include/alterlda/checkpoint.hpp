#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "alterlda/model.hpp"
#include "alterlda/splits.hpp"

namespace alterlda {

/// Everything needed to resume a chain or fold in new documents. Stored as
/// JSON; `format_version` guards the layout.
struct ModelCheckpoint {
  static constexpr int kFormatVersion = 1;

  HyperParams hyper;
  Assignments z;
  std::uint64_t seed = 0;
  std::uint64_t sweep_index = 0;
  std::string rng_state;
  std::uint64_t vocab_hash = 0;
  std::vector<std::string> vocabulary;
  PosteriorEstimate posterior;
  SplitSpec split;

  bool operator==(const ModelCheckpoint&) const = default;
};

ModelCheckpoint make_checkpoint(const ModelState& state, const PosteriorEstimate& posterior,
                                const SplitSpec& split);

void save_checkpoint(const ModelCheckpoint& ckpt, const std::filesystem::path& path);
ModelCheckpoint load_checkpoint(const std::filesystem::path& path);

/// Rebuilds the chain over `corpus`. Throws Error{VocabularyMismatch} if the
/// corpus vocabulary hash differs from the one the model was trained on.
ModelState restore_state(const ModelCheckpoint& ckpt, std::shared_ptr<const Corpus> corpus);

/// Throws Error{VocabularyMismatch} unless `vocab` hashes to ckpt.vocab_hash.
void require_vocabulary(const ModelCheckpoint& ckpt, const Vocabulary& vocab);

}  // namespace alterlda

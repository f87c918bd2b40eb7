#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "alterlda/corpus.hpp"
#include "alterlda/foldin.hpp"

namespace alterlda {

/// Mean recall over the classes present in `y_true`.
/// Throws Error{EmptyInput} for empty input, Error{InvalidArgument} for
/// unequal lengths.
double balanced_accuracy(std::span<const std::uint8_t> y_true, std::span<const std::uint8_t> y_pred);

/// Probability that a random positive outscores a random negative, ties
/// counting one half. Throws Error{SingleClass} unless both classes occur.
double auroc(std::span<const std::uint8_t> y_true, std::span<const double> scores);

struct EvalRow {
  std::string group;
  double balanced_accuracy = 0.0;
  std::optional<double> auroc;  // absent for single-class groups
  std::size_t support = 0;

  bool operator==(const EvalRow&) const = default;
};

struct EvalReport {
  std::vector<EvalRow> rows;  // sorted by group
  EvalRow total;

  bool operator==(const EvalReport&) const = default;
};

/// Scores held-out tokens: truth is each test token's alt_flag, predictions
/// are the fold-in suggestions and scores the fold-in probabilities.
/// `results[i]` must belong to `test.documents[i]`.
EvalReport evaluate_s3(const std::vector<FoldInResult>& results, const Corpus& test,
                       std::string_view group_by);

}  // namespace alterlda

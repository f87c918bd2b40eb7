#pragma once

// Metric definitions written the slow way: a confusion-matrix count and an
// all-pairs comparison.

#include <cstdint>
#include <vector>

namespace oracle {

inline double balanced_accuracy(const std::vector<std::uint8_t>& truth,
                                const std::vector<std::uint8_t>& pred) {
  long tp = 0, fn = 0, tn = 0, fp = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (truth[i] == 1 && pred[i] == 1) ++tp;
    if (truth[i] == 1 && pred[i] == 0) ++fn;
    if (truth[i] == 0 && pred[i] == 0) ++tn;
    if (truth[i] == 0 && pred[i] == 1) ++fp;
  }
  double sum = 0.0;
  int classes = 0;
  if (tp + fn > 0) {
    sum += static_cast<double>(tp) / static_cast<double>(tp + fn);
    ++classes;
  }
  if (tn + fp > 0) {
    sum += static_cast<double>(tn) / static_cast<double>(tn + fp);
    ++classes;
  }
  return sum / classes;
}

inline double auroc(const std::vector<std::uint8_t>& truth, const std::vector<double>& scores) {
  double wins = 0.0;
  long pairs = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (truth[i] != 1) continue;
    for (std::size_t j = 0; j < truth.size(); ++j) {
      if (truth[j] != 0) continue;
      ++pairs;
      if (scores[i] > scores[j]) wins += 1.0;
      else if (scores[i] == scores[j]) wins += 0.5;
    }
  }
  return wins / static_cast<double>(pairs);
}

}  // namespace oracle

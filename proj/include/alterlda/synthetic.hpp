#pragma once

#include <cstdint>
#include <vector>

#include "alterlda/execution.hpp"
#include "alterlda/foldin.hpp"
#include "alterlda/matrix.hpp"
#include "alterlda/model.hpp"
#include "alterlda/sampler.hpp"

namespace alterlda {

/// Symmetric-prior settings for drawing a corpus from the generative model.
struct SyntheticConfig {
  std::size_t num_docs = 100;
  std::size_t doc_length = 100;
  std::size_t vocab_size = 200;
  int num_topics = 5;
  double alpha = 0.1;
  double eta = 0.1;
  double xi = 0.1;
  std::uint64_t seed = 0;

  /// Throws Error{InvalidArgument} unless all sizes >= 1 and concentrations > 0.
  void validate() const;
};

struct SyntheticTruth {
  Matrix beta;   // K x V
  Matrix theta;  // M x K
  Matrix gamma;  // K x 2
  Assignments z;
  Corpus corpus;  // vocabulary "w0" .. "w{V-1}"; alteration flags are c
};

/// One draw from Dirichlet(concentration). Works in log space, so tiny
/// concentrations (down to ~1e-300) do not underflow to an all-zero vector.
std::vector<double> sample_dirichlet(const std::vector<double>& concentration, Rng& rng);

/// beta_k ~ Dir(eta), theta_m ~ Dir(alpha), gamma_k ~ Dir(xi); per token
/// z ~ theta_m, w ~ beta_z, c ~ gamma_z. Deterministic given cfg.seed.
SyntheticTruth generate_corpus(const SyntheticConfig& cfg);

enum class FlagRule {
  Argmax,    // c_hat = 1 iff E[gamma_hat[z, 1]] > E[gamma_hat[z, 0]]
  Threshold  // c_hat = 1 iff E[gamma_hat[z, 1]] >= threshold
};

struct ReconstructionConfig {
  TrainConfig train{200, 100, 10, false, 0};
  FoldInConfig fold{100, 50, 0.5};
  FlagRule rule = FlagRule::Argmax;
  double threshold = 0.5;
};

struct Reconstruction {
  double accuracy = 0.0;
  double majority_baseline = 0.0;  // frequency of the more common flag
};

/// Trains on the generated corpus (w and c observed), then re-infers every
/// token's topic from words only (fold-in with beta_hat and gamma_hat fixed)
/// and scores how often the implied flag equals the generated c.
/// Expectations are over the post-burn-in fold-in samples.
Reconstruction reconstruction_accuracy(const SyntheticTruth& truth, const HyperParams& hyper,
                                       std::uint64_t train_seed,
                                       const ReconstructionConfig& cfg = {});

struct GridSpec {
  std::vector<double> alphas{0.1, 0.5, 1.0};
  std::vector<double> etas{0.1, 0.5, 1.0};
  std::vector<double> xis{0.1, 0.5, 1.0};
  std::vector<std::size_t> sizes{5000, 20000};  // total tokens per corpus
  int runs = 2;
  std::uint64_t seed = 0;
  int num_topics = 10;
  std::size_t vocab_size = 500;
  std::size_t doc_length = 100;
  ReconstructionConfig reconstruction;

  void validate() const;
};

struct GridCell {
  double alpha = 0.0;
  double eta = 0.0;
  double xi = 0.0;
  std::size_t tokens = 0;
  int run = 0;
  double accuracy = 0.0;
  double majority_baseline = 0.0;

  bool operator==(const GridCell&) const = default;
};

/// Every (alpha, eta, xi, size, run) combination in that nesting order.
/// Job i draws its corpus from derive_seed(seed, 2i) and trains with
/// derive_seed(seed, 2i + 1); the same priors generate and fit the data.
std::vector<GridCell> grid_search(const GridSpec& spec, Execution exec = Execution::Parallel);

struct GridMean {
  double alpha, eta, xi;
  std::size_t tokens;
  double mean_accuracy;
  int runs;
};

/// Per-cell means over runs, in grid order.
std::vector<GridMean> grid_means(const std::vector<GridCell>& cells);

}  // namespace alterlda

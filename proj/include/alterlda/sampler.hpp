#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "alterlda/model.hpp"

namespace alterlda {

struct TrainConfig {
  int sweeps = 1000;
  int burn_in = 500;
  // Average the estimate over every `thin`-th post-burn-in state; with
  // `average` off the estimate comes from the final state alone.
  int thin = 10;
  bool average = true;
  // Record log_joint every `trace_every` sweeps (0 disables).
  int trace_every = 0;
};

struct TrainResult {
  ModelState state;
  PosteriorEstimate posterior;
  std::vector<std::pair<std::uint64_t, double>> trace;
};

/// (document, position) pairs in the order a sweep visits them.
using VisitOrder = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

/// Uniform random topics, one draw per token in document order.
/// Throws Error{EmptyCorpus} when the corpus holds no tokens.
ModelState init_state(std::shared_ptr<const Corpus> corpus, HyperParams hyper, std::uint64_t seed);

/// Unnormalised conditional over topics for token (m, n), computed from the
/// counts with that token's own contribution removed:
///   (n_mk + alpha_k) * (n_kw + eta_w) / (n_k + sum eta) * (n_ka + xi_a) / (n_k + sum xi)
/// Throws Error{IndexOutOfRange}.
std::vector<double> full_conditional(const ModelState& state, std::size_t m, std::size_t n);

/// One systematic scan over every token in document order.
void gibbs_sweep(ModelState& state);

/// Same update, visiting tokens in the given order.
void gibbs_sweep(ModelState& state, const VisitOrder& order);

/// Throws Error{InvalidArgument} unless sweeps > burn_in >= 0 and thin >= 1.
TrainResult train(std::shared_ptr<const Corpus> corpus, HyperParams hyper, std::uint64_t seed,
                  const TrainConfig& cfg = {});

/// Point estimates from the current counts.
PosteriorEstimate estimate_posterior(const ModelState& state);

/// log p(w, c, z | alpha, eta, xi) with theta, beta and gamma integrated out.
double log_joint(const ModelState& state);

/// Rebuilds the count tables from (z, w, c) and compares them with the
/// incrementally maintained ones.
bool audit_counts(const ModelState& state);

}  // namespace alterlda

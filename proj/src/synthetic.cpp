#include "alterlda/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "alterlda/error.hpp"
#include "alterlda/foldin.hpp"

namespace alterlda {

namespace {

constexpr std::string_view kModule = "synthetic-eval";

std::size_t draw_categorical(std::span<const double> probs, Rng& rng) {
  double total = 0.0;
  for (double p : probs) total += p;
  const double u = uniform01(rng) * total;
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    if (u < acc) return i;
  }
  // Rounding can leave u at the very top; take the last non-zero entry.
  for (std::size_t i = probs.size(); i-- > 0;)
    if (probs[i] > 0.0) return i;
  return probs.size() - 1;
}

void fill_row(Matrix& m, std::size_t r, const std::vector<double>& values) {
  std::copy(values.begin(), values.end(), m.row(r).begin());
}

}  // namespace

void SyntheticConfig::validate() const {
  if (num_docs < 1 || doc_length < 1 || vocab_size < 1 || num_topics < 1)
    throw Error(ErrorKind::InvalidArgument, kModule, "synthetic sizes must be >= 1");
  if (!(alpha > 0.0) || !(eta > 0.0) || !(xi > 0.0))
    throw Error(ErrorKind::InvalidArgument, kModule, "synthetic concentrations must be > 0");
}

std::vector<double> sample_dirichlet(const std::vector<double>& concentration, Rng& rng) {
  std::vector<double> log_g(concentration.size());
  for (std::size_t i = 0; i < concentration.size(); ++i) {
    const double a = concentration[i];
    if (a >= 1.0) {
      std::gamma_distribution<double> gamma(a, 1.0);
      log_g[i] = std::log(gamma(rng));
    } else {
      // G(a) = G(a + 1) * U^(1/a), taken in logs.
      std::gamma_distribution<double> gamma(a + 1.0, 1.0);
      const double u = 1.0 - uniform01(rng);  // (0, 1]
      log_g[i] = std::log(gamma(rng)) + std::log(u) / a;
    }
  }
  const double top = *std::max_element(log_g.begin(), log_g.end());
  double sum = 0.0;
  for (double& x : log_g) {
    x = std::exp(x - top);
    sum += x;
  }
  for (double& x : log_g) x /= sum;
  return log_g;
}

SyntheticTruth generate_corpus(const SyntheticConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  const auto k_count = static_cast<std::size_t>(cfg.num_topics);
  SyntheticTruth truth{Matrix(k_count, cfg.vocab_size), Matrix(cfg.num_docs, k_count),
                       Matrix(k_count, 2), {}, {}};

  const std::vector<double> eta(cfg.vocab_size, cfg.eta);
  const std::vector<double> alpha(k_count, cfg.alpha);
  const std::vector<double> xi(2, cfg.xi);
  for (std::size_t k = 0; k < k_count; ++k) fill_row(truth.beta, k, sample_dirichlet(eta, rng));
  for (std::size_t k = 0; k < k_count; ++k) fill_row(truth.gamma, k, sample_dirichlet(xi, rng));

  Vocabulary vocab;
  for (std::size_t v = 0; v < cfg.vocab_size; ++v) vocab.intern("w" + std::to_string(v));

  std::vector<TokenizedDocument> docs(cfg.num_docs);
  truth.z.resize(cfg.num_docs);
  for (std::size_t m = 0; m < cfg.num_docs; ++m) {
    fill_row(truth.theta, m, sample_dirichlet(alpha, rng));
    TokenizedDocument& doc = docs[m];
    doc.doc_id = "synth" + std::to_string(m);
    doc.author = "synthetic";
    doc.tokens.resize(cfg.doc_length);
    truth.z[m].resize(cfg.doc_length);
    for (std::size_t n = 0; n < cfg.doc_length; ++n) {
      const std::size_t z = draw_categorical(truth.theta.row(m), rng);
      const std::size_t w = draw_categorical(truth.beta.row(z), rng);
      const std::size_t c = draw_categorical(truth.gamma.row(z), rng);
      truth.z[m][n] = static_cast<int>(z);
      doc.tokens[n].surface = vocab.word(static_cast<int>(w));
      doc.tokens[n].vocab_id = static_cast<int>(w);
      doc.tokens[n].alt_flag = static_cast<std::uint8_t>(c);
    }
  }
  truth.corpus = make_corpus(std::move(docs), std::move(vocab));
  return truth;
}

Reconstruction reconstruction_accuracy(const SyntheticTruth& truth, const HyperParams& hyper,
                                       std::uint64_t train_seed, const ReconstructionConfig& cfg) {
  auto corpus = std::make_shared<const Corpus>(truth.corpus);
  const TrainResult fit = train(corpus, hyper, train_seed, cfg.train);
  // z is re-inferred from words alone so that c_hat cannot copy c.
  const auto folded = fold_in_batch(fit.posterior, hyper, corpus->documents, cfg.fold,
                                    derive_seed(train_seed, 1), Execution::Serial);

  std::size_t hits = 0, total = 0, ones = 0;
  for (std::size_t m = 0; m < corpus->num_docs(); ++m) {
    const auto& tokens = corpus->documents[m].tokens;
    for (std::size_t n = 0; n < tokens.size(); ++n) {
      const double p = folded[m].token_alt_prob[n];
      const int predicted = cfg.rule == FlagRule::Argmax ? (p > 0.5 ? 1 : 0)
                                                         : (p >= cfg.threshold ? 1 : 0);
      hits += predicted == tokens[n].alt_flag ? 1 : 0;
      ones += tokens[n].alt_flag;
      ++total;
    }
  }
  Reconstruction r;
  r.accuracy = static_cast<double>(hits) / static_cast<double>(total);
  r.majority_baseline =
      static_cast<double>(std::max(ones, total - ones)) / static_cast<double>(total);
  return r;
}

void GridSpec::validate() const {
  if (alphas.empty() || etas.empty() || xis.empty() || sizes.empty() || runs < 1)
    throw Error(ErrorKind::InvalidArgument, kModule, "grid dimensions must be non-empty");
  if (doc_length < 1 || vocab_size < 1 || num_topics < 1)
    throw Error(ErrorKind::InvalidArgument, kModule, "grid model sizes must be >= 1");
}

std::vector<GridCell> grid_search(const GridSpec& spec, Execution exec) {
  spec.validate();
  std::vector<GridCell> cells;
  for (double a : spec.alphas)
    for (double e : spec.etas)
      for (double x : spec.xis)
        for (std::size_t tokens : spec.sizes)
          for (int run = 0; run < spec.runs; ++run) cells.push_back({a, e, x, tokens, run, 0.0, 0.0});

  auto evaluate = [&spec](GridCell& cell, std::uint64_t index) {
    SyntheticConfig cfg;
    cfg.doc_length = spec.doc_length;
    cfg.num_docs = std::max<std::size_t>(1, cell.tokens / spec.doc_length);
    cfg.vocab_size = spec.vocab_size;
    cfg.num_topics = spec.num_topics;
    cfg.alpha = cell.alpha;
    cfg.eta = cell.eta;
    cfg.xi = cell.xi;
    cfg.seed = derive_seed(spec.seed, 2 * index);
    const SyntheticTruth truth = generate_corpus(cfg);
    const HyperParams hyper = HyperParams::symmetric(spec.num_topics, spec.vocab_size, cell.alpha,
                                                     cell.eta, {cell.xi, cell.xi});
    const Reconstruction r = reconstruction_accuracy(truth, hyper, derive_seed(spec.seed, 2 * index + 1),
                                                     spec.reconstruction);
    cell.accuracy = r.accuracy;
    cell.majority_baseline = r.majority_baseline;
  };

  const auto n = static_cast<std::ptrdiff_t>(cells.size());
  if (exec == Execution::Serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) evaluate(cells[i], static_cast<std::uint64_t>(i));
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) evaluate(cells[i], static_cast<std::uint64_t>(i));
  }
  return cells;
}

std::vector<GridMean> grid_means(const std::vector<GridCell>& cells) {
  std::vector<GridMean> means;
  std::map<std::tuple<double, double, double, std::size_t>, std::size_t> index;
  for (const GridCell& c : cells) {
    auto key = std::make_tuple(c.alpha, c.eta, c.xi, c.tokens);
    auto [it, fresh] = index.try_emplace(key, means.size());
    if (fresh) means.push_back({c.alpha, c.eta, c.xi, c.tokens, 0.0, 0});
    GridMean& m = means[it->second];
    m.mean_accuracy += c.accuracy;
    ++m.runs;
  }
  for (GridMean& m : means) m.mean_accuracy /= m.runs;
  return means;
}

}  // namespace alterlda

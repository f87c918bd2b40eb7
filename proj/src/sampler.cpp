#include "alterlda/sampler.hpp"

#include <cmath>

#include "alterlda/error.hpp"

namespace alterlda {

namespace {

constexpr std::string_view kModule = "alterlda-core";

// Fills `scores` with the conditional for a token whose counts have already
// been removed; returns the sum.
double conditional_scores(const ModelState& state, std::size_t m, int w, int a,
                          std::vector<double>& scores) {
  const HyperParams& h = state.hyper();
  const CountTables& c = state.counts();
  const double eta_sum = state.eta_sum();
  const double xi_sum = h.xi_sum();
  double total = 0.0;
  for (int k = 0; k < h.num_topics; ++k) {
    const double topic = c.topic_total(k);
    const double s = (c.doc_topic(m, k) + h.alpha[k]) *
                     (c.word_topic(static_cast<std::size_t>(w), k) + h.eta[w]) / (topic + eta_sum) *
                     (c.topic_flag(k, a) + h.xi[a]) / (topic + xi_sum);
    scores[k] = s;
    total += s;
  }
  return total;
}

void resample(ModelState& state, std::size_t m, std::size_t n, std::vector<double>& scores) {
  const int w = state.word(m, n);
  const int a = state.flag(m, n);
  const int old_topic = state.assignments()[m][n];
  CountTables& counts = state.mutable_counts();
  counts.update(m, static_cast<std::size_t>(w), a, old_topic, -1);

  const double total = conditional_scores(state, m, w, a, scores);
  const double u = uniform01(state.rng()) * total;
  const int k_max = state.hyper().num_topics;
  int topic = k_max - 1;
  double acc = 0.0;
  for (int k = 0; k < k_max; ++k) {
    acc += scores[k];
    if (u < acc) {
      topic = k;
      break;
    }
  }
  counts.update(m, static_cast<std::size_t>(w), a, topic, +1);
  state.set_assignment(m, n, topic);
}

void accumulate(Matrix& into, const Matrix& from) {
  auto& dst = into.data();
  const auto& src = from.data();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
}

void scale(Matrix& m, double factor) {
  for (double& x : m.data()) x *= factor;
}

}  // namespace

ModelState init_state(std::shared_ptr<const Corpus> corpus, HyperParams hyper, std::uint64_t seed) {
  if (!corpus || corpus->total_tokens() == 0)
    throw Error(ErrorKind::EmptyCorpus, kModule, "cannot initialise a model on an empty corpus");
  hyper.validate(corpus->vocab_size());
  Rng rng(seed);
  Assignments z(corpus->num_docs());
  const int k = hyper.num_topics;
  for (std::size_t m = 0; m < corpus->num_docs(); ++m) {
    z[m].resize(corpus->documents[m].tokens.size());
    for (int& topic : z[m]) topic = std::min(k - 1, static_cast<int>(uniform01(rng) * k));
  }
  return ModelState(std::move(corpus), std::move(hyper), std::move(z), seed, std::move(rng));
}

std::vector<double> full_conditional(const ModelState& state, std::size_t m, std::size_t n) {
  const Corpus& corpus = state.corpus();
  if (m >= corpus.num_docs() || n >= corpus.documents[m].tokens.size())
    throw Error(ErrorKind::IndexOutOfRange, kModule,
                "token (" + std::to_string(m) + ", " + std::to_string(n) + ") does not exist");
  const HyperParams& h = state.hyper();
  const CountTables& c = state.counts();
  const int w = state.word(m, n);
  const int a = state.flag(m, n);
  const int current = state.assignments()[m][n];
  const double eta_sum = state.eta_sum();
  const double xi_sum = h.xi_sum();

  std::vector<double> scores(static_cast<std::size_t>(h.num_topics));
  for (int k = 0; k < h.num_topics; ++k) {
    const int self = k == current ? 1 : 0;
    const double doc_topic = c.doc_topic(m, k) - self;
    const double word_topic = c.word_topic(static_cast<std::size_t>(w), k) - self;
    const double topic_flag = c.topic_flag(k, a) - self;
    const double topic = c.topic_total(k) - self;
    scores[k] = (doc_topic + h.alpha[k]) * (word_topic + h.eta[w]) / (topic + eta_sum) *
                (topic_flag + h.xi[a]) / (topic + xi_sum);
  }
  return scores;
}

void gibbs_sweep(ModelState& state) {
  std::vector<double> scores(static_cast<std::size_t>(state.hyper().num_topics));
  const auto& z = state.assignments();
  for (std::size_t m = 0; m < z.size(); ++m)
    for (std::size_t n = 0; n < z[m].size(); ++n) resample(state, m, n, scores);
  state.advance_sweep();
}

void gibbs_sweep(ModelState& state, const VisitOrder& order) {
  std::vector<double> scores(static_cast<std::size_t>(state.hyper().num_topics));
  const auto& z = state.assignments();
  for (auto [m, n] : order) {
    if (m >= z.size() || n >= z[m].size())
      throw Error(ErrorKind::IndexOutOfRange, kModule, "visit order names a missing token");
    resample(state, m, n, scores);
  }
  state.advance_sweep();
}

PosteriorEstimate estimate_posterior(const ModelState& state) {
  const HyperParams& h = state.hyper();
  const CountTables& c = state.counts();
  const auto k_count = static_cast<std::size_t>(h.num_topics);
  const std::size_t v_count = c.vocab_size();
  const std::size_t m_count = c.num_docs();
  const double eta_sum = h.eta_sum();
  const double alpha_sum = h.alpha_sum();
  const double xi_sum = h.xi_sum();

  PosteriorEstimate est{Matrix(k_count, v_count), Matrix(m_count, k_count), Matrix(k_count, 2)};
  for (std::size_t k = 0; k < k_count; ++k) {
    const int kk = static_cast<int>(k);
    const double topic = c.topic_total(kk);
    for (std::size_t v = 0; v < v_count; ++v)
      est.beta(k, v) = (c.word_topic(v, kk) + h.eta[v]) / (topic + eta_sum);
    for (int a = 0; a < 2; ++a) est.gamma(k, a) = (c.topic_flag(kk, a) + h.xi[a]) / (topic + xi_sum);
  }
  for (std::size_t m = 0; m < m_count; ++m) {
    const double len = static_cast<double>(state.assignments()[m].size());
    for (std::size_t k = 0; k < k_count; ++k)
      est.theta(m, k) = (c.doc_topic(m, static_cast<int>(k)) + h.alpha[k]) / (len + alpha_sum);
  }
  return est;
}

TrainResult train(std::shared_ptr<const Corpus> corpus, HyperParams hyper, std::uint64_t seed,
                  const TrainConfig& cfg) {
  if (cfg.burn_in < 0 || cfg.sweeps <= cfg.burn_in || cfg.thin < 1)
    throw Error(ErrorKind::InvalidArgument, kModule,
                "training needs sweeps > burn_in >= 0 and thin >= 1");
  ModelState state = init_state(std::move(corpus), std::move(hyper), seed);
  std::vector<std::pair<std::uint64_t, double>> trace;
  if (cfg.trace_every > 0) trace.emplace_back(0, log_joint(state));

  PosteriorEstimate sum;
  int samples = 0;
  for (int s = 1; s <= cfg.sweeps; ++s) {
    gibbs_sweep(state);
    if (cfg.trace_every > 0 && s % cfg.trace_every == 0) trace.emplace_back(s, log_joint(state));
    if (cfg.average && s > cfg.burn_in && (s - cfg.burn_in) % cfg.thin == 0) {
      PosteriorEstimate est = estimate_posterior(state);
      if (samples == 0) {
        sum = std::move(est);
      } else {
        accumulate(sum.beta, est.beta);
        accumulate(sum.theta, est.theta);
        accumulate(sum.gamma, est.gamma);
      }
      ++samples;
    }
  }
  PosteriorEstimate posterior;
  if (samples > 0) {
    const double inv = 1.0 / samples;
    scale(sum.beta, inv);
    scale(sum.theta, inv);
    scale(sum.gamma, inv);
    posterior = std::move(sum);
  } else {
    posterior = estimate_posterior(state);
  }
  return TrainResult{std::move(state), std::move(posterior), std::move(trace)};
}

double log_joint(const ModelState& state) {
  const HyperParams& h = state.hyper();
  const CountTables& c = state.counts();
  const int k_count = h.num_topics;
  const double alpha_sum = h.alpha_sum();
  const double eta_sum = h.eta_sum();
  const double xi_sum = h.xi_sum();

  double lp = 0.0;
  double lg_alpha = 0.0;
  for (double a : h.alpha) lg_alpha += std::lgamma(a);
  for (std::size_t m = 0; m < c.num_docs(); ++m) {
    const double len = static_cast<double>(state.assignments()[m].size());
    lp += std::lgamma(alpha_sum) - std::lgamma(len + alpha_sum) - lg_alpha;
    for (int k = 0; k < k_count; ++k) lp += std::lgamma(c.doc_topic(m, k) + h.alpha[k]);
  }
  double lg_eta = 0.0;
  for (double e : h.eta) lg_eta += std::lgamma(e);
  const double lg_xi = std::lgamma(h.xi[0]) + std::lgamma(h.xi[1]);
  for (int k = 0; k < k_count; ++k) {
    const double topic = c.topic_total(k);
    lp += std::lgamma(eta_sum) - std::lgamma(topic + eta_sum) - lg_eta;
    for (std::size_t v = 0; v < c.vocab_size(); ++v)
      lp += std::lgamma(c.word_topic(v, k) + h.eta[v]);
    lp += std::lgamma(xi_sum) - std::lgamma(topic + xi_sum) - lg_xi;
    for (int a = 0; a < 2; ++a) lp += std::lgamma(c.topic_flag(k, a) + h.xi[a]);
  }
  return lp;
}

bool audit_counts(const ModelState& state) {
  const CountTables rebuilt = tabulate(state.corpus(), state.assignments(), state.hyper().num_topics);
  return rebuilt == state.counts() && rebuilt.consistent(state.corpus().total_tokens());
}

}  // namespace alterlda

#include <cmath>
#include <numeric>

#include "alterlda/error.hpp"
#include "alterlda/synthetic.hpp"
#include "doctest.h"

using namespace alterlda;

namespace {

SyntheticConfig small_config(std::uint64_t seed) {
  SyntheticConfig cfg;
  cfg.num_docs = 20;
  cfg.doc_length = 30;
  cfg.vocab_size = 25;
  cfg.num_topics = 3;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_SUITE("synthetic") {
  TEST_CASE("dirichlet draws lie on the simplex") {
    Rng rng(8);
    for (double a : {1e-3, 0.1, 1.0, 5.0}) {
      for (int i = 0; i < 50; ++i) {
        const auto p = sample_dirichlet(std::vector<double>(7, a), rng);
        CHECK(std::accumulate(p.begin(), p.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-12));
        for (double x : p) CHECK(x >= 0.0);
      }
    }
  }

  TEST_CASE("dirichlet mean matches the normalised concentration") {
    Rng rng(21);
    const std::vector<double> conc{0.5, 1.5, 3.0};
    std::vector<double> mean(3, 0.0);
    const int draws = 20000;
    for (int i = 0; i < draws; ++i) {
      const auto p = sample_dirichlet(conc, rng);
      for (int j = 0; j < 3; ++j) mean[j] += p[j] / draws;
    }
    CHECK(mean[0] == doctest::Approx(0.1).epsilon(0.05));
    CHECK(mean[1] == doctest::Approx(0.3).epsilon(0.03));
    CHECK(mean[2] == doctest::Approx(0.6).epsilon(0.02));
  }

  TEST_CASE("tiny concentrations give near-degenerate draws") {
    Rng rng(4);
    int degenerate = 0;
    for (int i = 0; i < 100; ++i) {
      const auto p = sample_dirichlet(std::vector<double>(2, 1e-3), rng);
      degenerate += std::max(p[0], p[1]) > 0.99 ? 1 : 0;
    }
    CHECK(degenerate >= 95);
  }

  TEST_CASE("one topic: every assignment is topic 0 and words follow beta") {
    SyntheticConfig cfg = small_config(3);
    cfg.num_topics = 1;
    cfg.num_docs = 200;
    cfg.doc_length = 100;
    cfg.vocab_size = 10;
    cfg.eta = 1.0;
    const auto truth = generate_corpus(cfg);
    std::vector<double> freq(10, 0.0);
    for (std::size_t m = 0; m < cfg.num_docs; ++m) {
      for (int z : truth.z[m]) CHECK(z == 0);
      for (const auto& t : truth.corpus.documents[m].tokens) freq[t.vocab_id] += 1.0 / 20000.0;
    }
    double l1 = 0.0;
    for (std::size_t v = 0; v < 10; ++v) l1 += std::abs(freq[v] - truth.beta(0, v));
    CHECK(l1 < 0.05);
  }

  TEST_CASE("generation is deterministic in the seed") {
    const auto a = generate_corpus(small_config(17));
    const auto b = generate_corpus(small_config(17));
    const auto c = generate_corpus(small_config(18));
    CHECK(a.corpus == b.corpus);
    CHECK(a.z == b.z);
    CHECK(a.beta == b.beta);
    CHECK_FALSE(a.corpus == c.corpus);
    CHECK(a.corpus.documents.size() == 20);
    CHECK(a.corpus.vocabulary.size() == 25);
    CHECK(a.corpus.documents[4].doc_id == "synth4");
  }

  TEST_CASE("invalid configuration") {
    SyntheticConfig cfg = small_config(1);
    cfg.xi = 0.0;
    CHECK_THROWS_AS(generate_corpus(cfg), Error);
    cfg = small_config(1);
    cfg.num_docs = 0;
    CHECK_THROWS_AS(generate_corpus(cfg), Error);
    GridSpec spec;
    spec.alphas.clear();
    CHECK_THROWS_AS(grid_search(spec), Error);
  }

  TEST_CASE("an all-unaltered corpus is reconstructed perfectly") {
    auto truth = generate_corpus(small_config(9));
    for (auto& doc : truth.corpus.documents)
      for (auto& t : doc.tokens) t.alt_flag = 0;
    const auto hyper = HyperParams::symmetric(3, 25, 0.1, 0.1, {1.0, 1.0});
    ReconstructionConfig rc;
    rc.train = TrainConfig{40, 20, 5, false, 0};
    rc.fold = FoldInConfig{20, 10, 0.5};
    const auto r = reconstruction_accuracy(truth, hyper, 2, rc);
    CHECK(r.accuracy == 1.0);
    CHECK(r.majority_baseline == 1.0);
  }

  TEST_CASE("a 1x1 grid equals a direct reconstruction call") {
    GridSpec spec;
    spec.alphas = {0.5};
    spec.etas = {0.1};
    spec.xis = {0.1};
    spec.sizes = {600};
    spec.runs = 1;
    spec.seed = 33;
    spec.num_topics = 3;
    spec.vocab_size = 30;
    spec.doc_length = 30;
    spec.reconstruction.train = TrainConfig{30, 10, 5, false, 0};
    spec.reconstruction.fold = FoldInConfig{20, 10, 0.5};
    const auto cells = grid_search(spec, Execution::Serial);
    REQUIRE(cells.size() == 1);

    SyntheticConfig cfg;
    cfg.num_docs = 20;
    cfg.doc_length = 30;
    cfg.vocab_size = 30;
    cfg.num_topics = 3;
    cfg.alpha = 0.5;
    cfg.eta = 0.1;
    cfg.xi = 0.1;
    cfg.seed = derive_seed(33, 0);
    const auto direct = reconstruction_accuracy(generate_corpus(cfg),
                                                HyperParams::symmetric(3, 30, 0.5, 0.1, {0.1, 0.1}),
                                                derive_seed(33, 1), spec.reconstruction);
    CHECK(cells[0].accuracy == direct.accuracy);
    CHECK(cells[0].majority_baseline == direct.majority_baseline);
  }

  TEST_CASE("grid cells are ordered, bounded and execution independent") {
    GridSpec spec;
    spec.alphas = {0.1, 1.0};
    spec.etas = {0.5};
    spec.xis = {0.1, 1.0};
    spec.sizes = {300};
    spec.runs = 2;
    spec.seed = 5;
    spec.num_topics = 2;
    spec.vocab_size = 20;
    spec.doc_length = 30;
    spec.reconstruction.train = TrainConfig{20, 10, 5, false, 0};
    spec.reconstruction.fold = FoldInConfig{10, 5, 0.5};
    const auto serial = grid_search(spec, Execution::Serial);
    const auto parallel = grid_search(spec, Execution::Parallel);
    CHECK(serial == parallel);
    REQUIRE(serial.size() == 8);
    CHECK(serial[0].alpha == 0.1);
    CHECK(serial[0].run == 0);
    CHECK(serial[1].run == 1);
    CHECK(serial[2].xi == 1.0);
    CHECK(serial[7].alpha == 1.0);
    for (const auto& c : serial) {
      CHECK(c.accuracy >= 0.0);
      CHECK(c.accuracy <= 1.0);
      CHECK(c.majority_baseline >= 0.5);
    }
    const auto means = grid_means(serial);
    REQUIRE(means.size() == 4);
    CHECK(means[0].runs == 2);
    CHECK(means[0].mean_accuracy == doctest::Approx((serial[0].accuracy + serial[1].accuracy) / 2));
  }
}

#include <random>

#include "alterlda/error.hpp"
#include "alterlda/metrics.hpp"
#include "doctest.h"
#include "oracles/brute_metrics.hpp"
#include "support.hpp"

using namespace alterlda;

TEST_SUITE("metrics") {
  TEST_CASE("balanced accuracy examples") {
    using V = std::vector<std::uint8_t>;
    CHECK(balanced_accuracy(V{1, 0, 1, 0}, V{1, 0, 1, 0}) == 1.0);
    CHECK(balanced_accuracy(V{1, 1, 0, 0}, V{1, 1, 1, 1}) == 0.5);
    CHECK(balanced_accuracy(V{1, 1, 0, 0, 0, 0}, V{1, 0, 0, 0, 1, 1}) == 0.5);
    CHECK(balanced_accuracy(V{0, 0, 0}, V{0, 1, 0}) == doctest::Approx(2.0 / 3.0));
    CHECK_THROWS_AS(balanced_accuracy(V{}, V{}), Error);
    CHECK_THROWS_AS(balanced_accuracy(V{1}, V{1, 0}), Error);
  }

  TEST_CASE("auroc examples") {
    using V = std::vector<std::uint8_t>;
    using S = std::vector<double>;
    CHECK(auroc(V{0, 0, 1, 1}, S{0.1, 0.2, 0.3, 0.4}) == 1.0);
    CHECK(auroc(V{0, 1, 0, 1}, S{0.5, 0.5, 0.5, 0.5}) == 0.5);
    CHECK(auroc(V{1, 0, 1, 0}, S{0.9, 0.8, 0.4, 0.1}) == 0.75);
    try {
      auroc(V{1, 1}, S{0.1, 0.2});
      FAIL("expected SingleClass");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SingleClass);
    }
  }

  TEST_CASE("metrics agree with brute force on random inputs") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = 2 + rng() % 40;
      std::vector<std::uint8_t> truth(n), pred(n);
      std::vector<double> scores(n);
      for (std::size_t i = 0; i < n; ++i) {
        truth[i] = rng() % 2;
        pred[i] = rng() % 2;
        scores[i] = static_cast<double>(rng() % 7) / 7.0;  // plenty of ties
      }
      truth[0] = 0;
      truth[1] = 1;
      CHECK(balanced_accuracy(truth, pred) == doctest::Approx(oracle::balanced_accuracy(truth, pred)).epsilon(1e-12));
      CHECK(auroc(truth, scores) == doctest::Approx(oracle::auroc(truth, scores)).epsilon(1e-12));
    }
  }

  TEST_CASE("auroc is invariant under monotone transforms") {
    std::mt19937_64 rng(3);
    std::vector<std::uint8_t> y(50);
    std::vector<double> s(50), t(50);
    for (std::size_t i = 0; i < 50; ++i) {
      y[i] = i % 3 == 0;
      s[i] = static_cast<double>(rng() % 1000) / 1000.0;
      t[i] = std::exp(3.0 * s[i]) - 4.0;
    }
    CHECK(auroc(y, s) == auroc(y, t));
  }

  TEST_CASE("evaluate_s3") {
    Corpus test = testing_support::tiny_corpus({{0, 1, 0}, {1, 1}, {0, 0}}, {{1, 0, 1}, {0, 1}, {0, 0}}, 2);
    test.documents[0].author = "A";
    test.documents[1].author = "A";
    test.documents[2].author = "B";
    std::vector<FoldInResult> results{
        {"d0", {0.9, 0.1, 0.8}, {1, 0, 1}},
        {"d1", {0.2, 0.7}, {0, 1}},
        {"d2", {0.3, 0.6}, {0, 1}},
    };
    const auto report = evaluate_s3(results, test, "author");
    REQUIRE(report.rows.size() == 2);
    CHECK(report.rows[0].group == "A");
    CHECK(report.rows[0].balanced_accuracy == 1.0);
    CHECK(report.rows[0].auroc == 1.0);
    CHECK(report.rows[0].support == 5);
    CHECK(report.rows[1].group == "B");
    CHECK_FALSE(report.rows[1].auroc.has_value());
    CHECK(report.rows[1].balanced_accuracy == 0.5);
    CHECK(report.total.group == "TOTAL");
    CHECK(report.total.support == 7);
    // All 7 tokens: truth 1,0,1,0,1,0,0 vs scores .9,.1,.8,.2,.7,.3,.6.
    CHECK(report.total.auroc == doctest::Approx(1.0));
    CHECK(report.total.balanced_accuracy == doctest::Approx(0.5 * (1.0 + 3.0 / 4.0)));
  }
}

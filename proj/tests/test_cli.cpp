#include <cstdlib>
#include <fstream>
#include <sstream>

#include "alterlda/report.hpp"
#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using alterlda::cli::run_cli;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

// ingest -> classify -> train (s3) -> eval on the bundled fixture.
fs::path fixture_pipeline(const fs::path& dir, const std::string& seed) {
  const fs::path fx = testing_support::fixture_dir();
  REQUIRE(cli({"ingest", "--in", (fx / "tei").string(), "--out", (dir / "raw.jsonl").string()}).code == 0);
  REQUIRE(cli({"classify", "--corpus", (dir / "raw.jsonl").string(), "--dict", (fx / "lemmas.tsv").string(),
               "--vectors", (fx / "vectors.vec").string(), "--out", (dir / "spans.csv").string(),
               "--out-corpus", (dir / "corpus.jsonl").string()})
              .code == 0);
  REQUIRE(cli({"train", "--corpus", (dir / "corpus.jsonl").string(), "--k", "4", "--sweeps", "60",
               "--burn-in", "30", "--thin", "5", "--split", "s3", "--seed", seed, "--out",
               (dir / "model.json").string()})
              .code == 0);
  const auto r = cli({"eval", "--model", (dir / "model.json").string(), "--corpus",
                      (dir / "corpus.jsonl").string(), "--fold-sweeps", "40", "--fold-burn-in", "20",
                      "--seed", seed, "--out", (dir / "table1.csv").string()});
  REQUIRE(r.code == 0);
  return dir / "table1.csv";
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("help for every subcommand") {
    for (const char* sub : {"ingest", "classify", "train", "suggest", "eval", "synth", "report", "run"}) {
      const auto r = cli({sub, "--help"});
      CHECK(r.code == 0);
      CHECK(r.out.find("--") != std::string::npos);
    }
    CHECK(cli({"--version"}).code == 0);
    CHECK(cli({"train", "--no-such-flag"}).code == 2);
  }

  TEST_CASE("missing inputs name the path") {
    const auto r = cli({"train", "--corpus", "/nonexistent/c.jsonl", "--out", "m.json"});
    CHECK(r.code == 3);
    CHECK(r.err.find("IoError") != std::string::npos);
    CHECK(r.err.find("/nonexistent/c.jsonl") != std::string::npos);
    CHECK(cli({"train", "--out", "m.json"}).code == 2);
  }

  TEST_CASE("fixture pipeline writes the evaluation table and metadata") {
    const fs::path dir = testing_support::scratch_dir("cli-pipeline");
    const fs::path table = fixture_pipeline(dir, "5");
    std::ifstream in(table);
    const auto t = alterlda::read_csv(in);
    CHECK(t.header == std::vector<std::string>{"group", "balanced_accuracy", "auroc", "support"});
    REQUIRE(t.rows.size() == 5);  // four authors + TOTAL
    CHECK(std::get<std::string>(t.rows.back()[0]) == "TOTAL");
    for (const auto& row : t.rows) {
      const double ba = std::get<double>(row[1]);
      CHECK(ba >= 0.0);
      CHECK(ba <= 1.0);
    }

    const auto meta = nlohmann::json::parse(slurp(fs::path(table.string() + ".meta.json")));
    CHECK(meta["command"] == "eval");
    CHECK(meta["seed"] == 5);
    CHECK(meta["config_hash"].get<std::string>().size() == 16);
    CHECK(fs::exists(dir / "model.json.meta.json"));

    const auto spans = slurp(dir / "spans.csv");
    CHECK(spans.rfind("doc_id,span_id,category\n", 0) == 0);

    const auto text = cli({"report", "--in", table.string()});
    CHECK(text.code == 0);
    CHECK(text.out.find("TOTAL") != std::string::npos);
    const auto sug = cli({"suggest", "--model", (dir / "model.json").string(), "--corpus",
                          (dir / "corpus.jsonl").string(), "--fold-sweeps", "20", "--fold-burn-in", "10",
                          "--format", "csv"});
    CHECK(sug.code == 0);
    CHECK(sug.out.rfind("group,suggested_count,top_words\n", 0) == 0);
  }

  TEST_CASE("same seed, same bytes") {
    const auto a = slurp(fixture_pipeline(testing_support::scratch_dir("cli-seed-a"), "11"));
    const auto b = slurp(fixture_pipeline(testing_support::scratch_dir("cli-seed-b"), "11"));
    CHECK(a == b);
  }

  TEST_CASE("seed precedence and config injection") {
    const fs::path dir = testing_support::scratch_dir("cli-config");
    const std::string grid = "--grid-alpha=0.5";
    const std::vector<std::string> synth{"synth", grid, "--grid-eta=0.5", "--grid-xi=0.5", "--sizes=200",
                                         "--runs=1", "--k=2", "--vocab=10", "--doc-length=20",
                                         "--sweeps=10", "--burn-in=5", "--serial"};
    auto with = [&](std::vector<std::string> extra, const std::string& out) {
      auto args = synth;
      args.insert(args.end(), extra.begin(), extra.end());
      args.push_back("--out=" + (dir / out).string());
      REQUIRE(cli(args).code == 0);
      return nlohmann::json::parse(slurp(dir / (out + ".meta.json")))["seed"].get<std::uint64_t>();
    };
    CHECK(with({}, "default.csv") == 1);
    CHECK(with({"--seed=9"}, "flag.csv") == 9);
    setenv("ALTERLDA_SEED", "4", 1);
    CHECK(with({}, "env.csv") == 4);
    CHECK(with({"--seed=9"}, "flag-env.csv") == 9);

    {
      std::ofstream cfg(dir / "run.ini");
      cfg << "seed = 6\n[synth]\nk = 2\nruns = 1\n";
    }
    auto args = synth;
    args.push_back("--out=" + (dir / "config.csv").string());
    args.push_back("--config=" + (dir / "run.ini").string());
    REQUIRE(cli(args).code == 0);
    CHECK(nlohmann::json::parse(slurp(dir / "config.csv.meta.json"))["seed"] == 6);
    args.push_back("--seed=8");
    REQUIRE(cli(args).code == 0);
    CHECK(nlohmann::json::parse(slurp(dir / "config.csv.meta.json"))["seed"] == 8);
    unsetenv("ALTERLDA_SEED");

    {
      std::ofstream bad(dir / "bad.ini");
      bad << "[synth]\ncolour = red\n";
    }
    const auto r = cli({"synth", "--config", (dir / "bad.ini").string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("bad.ini:2") != std::string::npos);
  }

  TEST_CASE("run executes config sections in order") {
    const fs::path dir = testing_support::scratch_dir("cli-run");
    const fs::path fx = testing_support::fixture_dir();
    {
      std::ofstream cfg(dir / "pipeline.ini");
      cfg << "seed = 3\n"
          << "[ingest]\nin = " << (fx / "tei").string() << "\nout = " << (dir / "c.jsonl").string() << "\n"
          << "[train]\ncorpus = " << (dir / "c.jsonl").string() << "\nk = 3\nsweeps = 20\nburn-in = 10\n"
          << "out = " << (dir / "m.json").string() << "\n";
    }
    const auto r = cli({"run", "--config", (dir / "pipeline.ini").string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("== ingest") < r.out.find("== train"));
    CHECK(fs::exists(dir / "m.json"));
    CHECK(nlohmann::json::parse(slurp(dir / "m.json.meta.json"))["seed"] == 3);
  }
}

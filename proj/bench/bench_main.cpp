#include <benchmark/benchmark.h>

#include "alterlda/foldin.hpp"
#include "alterlda/sampler.hpp"
#include "alterlda/synthetic.hpp"

using namespace alterlda;

namespace {

const SyntheticTruth& truth() {
  static const SyntheticTruth t = [] {
    SyntheticConfig cfg;
    cfg.num_docs = 200;
    cfg.doc_length = 100;
    cfg.vocab_size = 500;
    cfg.num_topics = 10;
    cfg.seed = 3;
    return generate_corpus(cfg);
  }();
  return t;
}

HyperParams hyper() { return HyperParams::symmetric(10, 500, 0.1, 0.1, {0.1, 0.1}); }

void BM_GibbsSweep(benchmark::State& st) {
  auto corpus = std::make_shared<const Corpus>(truth().corpus);
  auto state = init_state(corpus, hyper(), 1);
  for (auto _ : st) gibbs_sweep(state);
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(corpus->total_tokens()));
}
BENCHMARK(BM_GibbsSweep);

void BM_FoldInBatch(benchmark::State& st) {
  auto corpus = std::make_shared<const Corpus>(truth().corpus);
  const auto fit = train(corpus, hyper(), 1, TrainConfig{50, 25, 5, true, 0});
  const auto exec = st.range(0) == 0 ? Execution::Serial : Execution::Parallel;
  for (auto _ : st)
    benchmark::DoNotOptimize(fold_in_batch(fit.posterior, hyper(), corpus->documents, FoldInConfig{40, 20, 0.5}, 2, exec));
  st.SetLabel(st.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_FoldInBatch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_GridSearch(benchmark::State& st) {
  GridSpec spec;
  spec.alphas = {0.1, 1.0};
  spec.etas = {0.5};
  spec.xis = {0.1, 1.0};
  spec.sizes = {2000};
  spec.runs = 1;
  spec.num_topics = 5;
  spec.vocab_size = 100;
  spec.doc_length = 50;
  spec.reconstruction.train = TrainConfig{50, 25, 5, false, 0};
  spec.reconstruction.fold = FoldInConfig{30, 15, 0.5};
  const auto exec = st.range(0) == 0 ? Execution::Serial : Execution::Parallel;
  for (auto _ : st) benchmark::DoNotOptimize(grid_search(spec, exec));
  st.SetLabel(st.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_GridSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

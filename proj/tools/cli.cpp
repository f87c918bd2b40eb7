#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "alterlda/checkpoint.hpp"
#include "alterlda/config.hpp"
#include "alterlda/corpus.hpp"
#include "alterlda/error.hpp"
#include "alterlda/foldin.hpp"
#include "alterlda/lexicon.hpp"
#include "alterlda/metrics.hpp"
#include "alterlda/report.hpp"
#include "alterlda/rules.hpp"
#include "alterlda/sampler.hpp"
#include "alterlda/splits.hpp"
#include "alterlda/synthetic.hpp"
#include "alterlda/tei.hpp"
#include "alterlda/tokenizer.hpp"
#include "json.hpp"

namespace alterlda::cli {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kModule = "cli-reporting";
constexpr std::uint64_t kDefaultSeed = 1;

template <typename T>
std::vector<T> parse_list(const std::string& text, std::string_view what) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::istringstream is(item);
    T value{};
    if (!(is >> value) || !(is >> std::ws).eof())
      throw Error(ErrorKind::InvalidArgument, kModule,
                  "bad value '" + item + "' in " + std::string(what));
    out.push_back(value);
  }
  if (out.empty())
    throw Error(ErrorKind::InvalidArgument, kModule, std::string(what) + " is empty");
  return out;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

// State shared by the subcommand handlers of one invocation.
struct Invocation {
  std::ostream& out;
  std::ostream& err;
  std::string command;
  std::uint64_t seed = kDefaultSeed;
  std::string settings;  // canonical option dump of the subcommand

  void write_meta(const fs::path& artifact) const {
    nlohmann::ordered_json meta;
    meta["tool"] = "alterlda";
    meta["version"] = kVersion;
    meta["command"] = command;
    meta["artifact"] = artifact.filename().string();
    meta["seed"] = seed;
    meta["config_hash"] = hex64(fnv1a(settings));
    nlohmann::ordered_json lines = nlohmann::ordered_json::array();
    std::istringstream in(settings);
    for (std::string line; std::getline(in, line);)
      if (!line.empty()) lines.push_back(line);
    meta["settings"] = std::move(lines);
    std::ofstream f(fs::path(artifact.string() + ".meta.json"), std::ios::binary);
    if (!f) throw Error(ErrorKind::IoError, kModule, "cannot write " + artifact.string() + ".meta.json");
    f << meta.dump(2) << '\n';
  }

  void write_file(const fs::path& path, const std::string& content) const {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::IoError, kModule, "cannot write " + path.string());
    f << content;
    if (!f) throw Error(ErrorKind::IoError, kModule, "failed writing " + path.string());
    write_meta(path);
  }

  // Writes a table to `path` in `format` or, without a path, to stdout.
  void emit(const Table& table, const std::string& path, const std::string& format,
            std::string_view file_default, std::string_view stdout_default) const {
    std::ostringstream buf;
    if (path.empty()) {
      emit_table(table, report_format_from_string(format.empty() ? stdout_default : format), out);
      return;
    }
    emit_table(table, report_format_from_string(format.empty() ? file_default : format), buf);
    write_file(path, buf.str());
  }
};

void require_file(const std::string& path, std::string_view what) {
  if (path.empty())
    throw Error(ErrorKind::InvalidArgument, kModule, "--" + std::string(what) + " is required");
  if (!fs::exists(path)) throw Error(ErrorKind::IoError, kModule, "no such file: " + path);
}

Execution execution(bool serial) { return serial ? Execution::Serial : Execution::Parallel; }

Vocabulary vocabulary_of(const ModelCheckpoint& ckpt) {
  Vocabulary v;
  for (const auto& w : ckpt.vocabulary) v.intern(w);
  return v;
}

// ---- ingest ---------------------------------------------------------------

struct IngestOpts {
  std::string in, out, stopwords;
  bool keep_punct = false;
};

void run_ingest(const IngestOpts& o, const Invocation& inv) {
  if (o.in.empty()) throw Error(ErrorKind::InvalidArgument, kModule, "--in is required");
  if (o.out.empty()) throw Error(ErrorKind::InvalidArgument, kModule, "--out is required");
  if (!fs::is_directory(o.in)) throw Error(ErrorKind::IoError, kModule, "no such directory: " + o.in);
  TokenizerConfig cfg;
  cfg.keep_punct = o.keep_punct;
  if (!o.stopwords.empty()) {
    require_file(o.stopwords, "stopwords");
    std::ifstream f(o.stopwords);
    for (std::string line; std::getline(f, line);) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty() && line.front() != '#') cfg.stopwords.insert(line);
    }
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(o.in))
    if (entry.is_regular_file() && entry.path().extension() == ".xml") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw Error(ErrorKind::EmptyCorpus, kModule, "no .xml files in " + o.in);

  std::vector<TokenizedDocument> docs;
  for (const auto& file : files) {
    RawDocument raw = parse_tei_file(file);
    for (const auto& w : raw.warnings) inv.err << "warning: " << file.filename().string() << ": " << w << '\n';
    docs.push_back(tokenize(raw, cfg));
  }
  Corpus corpus = build_corpus(std::move(docs));
  std::ostringstream docs_buf, vocab_buf;
  write_corpus_jsonl(corpus, docs_buf, vocab_buf);
  inv.write_file(o.out, docs_buf.str());
  {
    std::ofstream v(vocab_sidecar(o.out), std::ios::binary);
    if (!v) throw Error(ErrorKind::IoError, kModule, "cannot write " + vocab_sidecar(o.out).string());
    v << vocab_buf.str();
  }
  std::size_t spans = 0;
  for (const auto& d : corpus.documents) spans += d.spans.size();
  inv.out << "ingested " << corpus.num_docs() << " documents, " << corpus.total_tokens()
          << " tokens, " << corpus.vocab_size() << " types, " << spans << " alteration spans\n";
}

// ---- classify -------------------------------------------------------------

struct ClassifyOpts {
  std::string corpus, dict, vectors, patterns, out, out_corpus;
  std::size_t max_dist = 2;
  double style_threshold = 0.3;
  bool unknown_hand = false;
  bool serial = false;
};

void run_classify(const ClassifyOpts& o, const Invocation& inv) {
  require_file(o.corpus, "corpus");
  require_file(o.dict, "dict");
  require_file(o.vectors, "vectors");
  Corpus corpus = load_corpus(o.corpus);
  const LemmaDictionary dict = LemmaDictionary::load(o.dict);
  const WordVectors vecs = WordVectors::load(o.vectors);
  RuleConfig cfg;
  cfg.max_dist = o.max_dist;
  cfg.style_threshold = o.style_threshold;
  cfg.paratext_accept_unknown_hand = o.unknown_hand;
  if (!o.patterns.empty()) {
    require_file(o.patterns, "patterns");
    cfg.paratext_patterns = ParatextPatterns::load(o.patterns);
  }
  if (!(cfg.style_threshold > 0.0 && cfg.style_threshold < 2.0))
    throw Error(ErrorKind::InvalidArgument, kModule, "--style-threshold must lie in (0, 2)");
  classify_corpus(corpus, RuleDeps{dict, vecs, cfg}, execution(o.serial));

  Table table{{"doc_id", "span_id", "category"}, {}};
  std::map<Category, std::size_t> tally;
  for (const auto& doc : corpus.documents)
    for (const auto& span : doc.spans) {
      table.rows.push_back({doc.doc_id, static_cast<std::int64_t>(span.span_id),
                            std::string(to_string(span.category()))});
      ++tally[span.category()];
    }
  if (!o.out_corpus.empty()) {
    std::ostringstream docs_buf, vocab_buf;
    write_corpus_jsonl(corpus, docs_buf, vocab_buf);
    inv.write_file(o.out_corpus, docs_buf.str());
    std::ofstream v(vocab_sidecar(o.out_corpus), std::ios::binary);
    v << vocab_buf.str();
  }
  if (!o.out.empty() || o.out_corpus.empty()) inv.emit(table, o.out, "", "csv", "csv");
  if (!o.out.empty() || !o.out_corpus.empty()) {
    inv.out << "classified " << table.rows.size() << " spans:";
    for (const auto& [cat, n] : tally) inv.out << ' ' << to_string(cat) << '=' << n;
    inv.out << '\n';
  }
}

// ---- train ----------------------------------------------------------------

struct TrainOpts {
  std::string corpus, out, xi = "1,1", split = "s1";
  int k = 20;
  double alpha = 0.1, eta = 0.1;
  int sweeps = 1000, burn_in = 500, thin = 10;
  bool single_sample = false;
  double test_fraction = 0.2;
};

void run_train(const TrainOpts& o, const Invocation& inv) {
  require_file(o.corpus, "corpus");
  if (o.out.empty()) throw Error(ErrorKind::InvalidArgument, kModule, "--out is required");
  const Corpus corpus = load_corpus(o.corpus);
  SplitSpec spec;
  spec.setting = split_setting_from_string(o.split);
  spec.seed = inv.seed;
  if (spec.setting == SplitSetting::S3) spec.test_fraction = o.test_fraction;
  spec.validate();
  CorpusSplit parts = split(corpus, spec);

  auto xi = parse_list<double>(o.xi, "--xi");
  if (xi.size() == 1) xi.push_back(xi.front());
  if (xi.size() != 2) throw Error(ErrorKind::InvalidArgument, kModule, "--xi takes one or two values");
  if (o.k < 1) throw Error(ErrorKind::InvalidArgument, kModule, "--k must be >= 1");
  HyperParams hyper = HyperParams::symmetric(o.k, corpus.vocab_size(), o.alpha, o.eta, {xi[0], xi[1]});
  TrainConfig cfg;
  cfg.sweeps = o.sweeps;
  cfg.burn_in = o.burn_in;
  cfg.thin = o.thin;
  cfg.average = !o.single_sample;

  auto train_corpus = std::make_shared<const Corpus>(std::move(parts.train));
  TrainResult fit = train(train_corpus, hyper, inv.seed, cfg);
  const ModelCheckpoint ckpt = make_checkpoint(fit.state, fit.posterior, spec);
  save_checkpoint(ckpt, o.out);
  inv.write_meta(o.out);
  inv.out << "trained K=" << o.k << " on " << train_corpus->num_docs() << " documents ("
          << train_corpus->total_tokens() << " tokens), split " << o.split
          << ", log joint " << format_double(log_joint(fit.state)) << '\n';
}

// ---- suggest / eval -------------------------------------------------------

struct FoldOpts {
  std::string model, corpus, group_by = "author", out, format, docs = "auto";
  double threshold = 0.5;
  int fold_sweeps = 200, fold_burn_in = 100;
  std::size_t top = 25;
  bool serial = false;

  FoldInConfig config() const { return FoldInConfig{fold_sweeps, fold_burn_in, threshold}; }
};

void run_suggest(const FoldOpts& o, const Invocation& inv) {
  require_file(o.model, "model");
  require_file(o.corpus, "corpus");
  const ModelCheckpoint ckpt = load_checkpoint(o.model);
  const Corpus corpus = load_corpus(o.corpus);
  bool use_test = false;
  if (o.docs == "test") use_test = true;
  else if (o.docs == "auto") use_test = ckpt.split.setting != SplitSetting::S1;
  else if (o.docs != "all")
    throw Error(ErrorKind::InvalidArgument, kModule, "--docs must be auto, all or test");

  Corpus targets;
  targets.vocabulary = vocabulary_of(ckpt);
  if (use_test) {
    require_vocabulary(ckpt, corpus.vocabulary);
    targets.documents = split(corpus, ckpt.split).test.documents;
  } else {
    for (const auto& doc : corpus.documents)
      targets.documents.push_back(remap_to_vocabulary(doc, targets.vocabulary));
  }
  const auto results = fold_in_batch(ckpt.posterior, ckpt.hyper, targets.documents, o.config(),
                                     inv.seed, execution(o.serial));
  inv.emit(to_table(suggest_report(results, targets, o.group_by, o.top)), o.out, o.format, "csv",
           "text");
}

void run_eval(const FoldOpts& o, const Invocation& inv) {
  require_file(o.model, "model");
  require_file(o.corpus, "corpus");
  const ModelCheckpoint ckpt = load_checkpoint(o.model);
  if (ckpt.split.setting != SplitSetting::S3)
    throw Error(ErrorKind::InvalidArgument, kModule,
                "eval needs a model trained with --split s3, this one used " +
                    std::string(to_string(ckpt.split.setting)));
  const Corpus corpus = load_corpus(o.corpus);
  require_vocabulary(ckpt, corpus.vocabulary);
  const Corpus test = split(corpus, ckpt.split).test;
  const auto results =
      fold_in_batch(ckpt.posterior, ckpt.hyper, test.documents, o.config(), inv.seed, execution(o.serial));
  inv.emit(to_table(evaluate_s3(results, test, o.group_by)), o.out, o.format, "csv", "text");
}

// ---- synth ----------------------------------------------------------------

struct SynthOpts {
  std::string alphas = "0.1,0.5,1.0", etas = "0.1,0.5,1.0", xis = "0.1,0.5,1.0",
              sizes = "5000,20000", out, format, rule = "argmax";
  int runs = 2, k = 10;
  std::size_t vocab = 500, doc_length = 100;
  int sweeps = 200, burn_in = 100;
  double flag_threshold = 0.5;
  bool serial = false;
};

void run_synth(const SynthOpts& o, const Invocation& inv) {
  GridSpec spec;
  spec.alphas = parse_list<double>(o.alphas, "--grid-alpha");
  spec.etas = parse_list<double>(o.etas, "--grid-eta");
  spec.xis = parse_list<double>(o.xis, "--grid-xi");
  spec.sizes = parse_list<std::size_t>(o.sizes, "--sizes");
  spec.runs = o.runs;
  spec.seed = inv.seed;
  spec.num_topics = o.k;
  spec.vocab_size = o.vocab;
  spec.doc_length = o.doc_length;
  spec.reconstruction.train = TrainConfig{o.sweeps, o.burn_in, 1, false, 0};
  if (o.rule == "argmax") spec.reconstruction.rule = FlagRule::Argmax;
  else if (o.rule == "threshold") spec.reconstruction.rule = FlagRule::Threshold;
  else throw Error(ErrorKind::InvalidArgument, kModule, "--flag-rule must be argmax or threshold");
  spec.reconstruction.threshold = o.flag_threshold;
  const auto cells = grid_search(spec, execution(o.serial));
  inv.emit(to_table(cells), o.out, o.format, "csv", "text");
  if (!o.out.empty()) render_heat_map(cells, inv.out);
}

// ---- report ---------------------------------------------------------------

struct ReportOpts {
  std::string in, out, format;
};

void run_report(const ReportOpts& o, const Invocation& inv) {
  require_file(o.in, "in");
  std::ifstream f(o.in, std::ios::binary);
  inv.emit(read_csv(f), o.out, o.format, "json", "text");
}

std::pair<std::string, std::vector<std::string>> extract_config(std::vector<std::string>& args) {
  std::string path;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size())
        throw Error(ErrorKind::ConfigError, kModule, "--config needs a file argument");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  return {path, rest};
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ConfigError:
    case ErrorKind::InvalidArgument: return 2;
    case ErrorKind::IoError: return 3;
    default: return 1;
  }
}

int dispatch(std::vector<std::string> args, const RunConfig* config, std::ostream& out,
             std::ostream& err);

int run_config(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.sections.empty())
    throw Error(ErrorKind::ConfigError, kModule, "config has no sections to run");
  for (const auto& section : config.sections) {
    out << "== " << section.name << '\n';
    const int code = dispatch({section.name}, &config, out, err);
    if (code != 0) return code;
  }
  return 0;
}

int dispatch(std::vector<std::string> args, const RunConfig* config, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Alteration-aware topic modelling for manuscript corpora", "alterlda"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");
  app.footer("Every subcommand also takes --config <file>; flags override file values.");

  std::uint64_t seed = 0;
  auto add_seed = [&seed](CLI::App* sub) {
    return sub->add_option("--seed", seed, "Random seed (flag > config > ALTERLDA_SEED)");
  };
  std::map<std::string, CLI::Option*> seed_opts;
  std::map<std::string, CLI::App*> subs;

  IngestOpts ingest;
  auto* s = subs["ingest"] = app.add_subcommand("ingest", "Parse TEI files into a corpus");
  s->add_option("--in", ingest.in, "Directory of TEI .xml files");
  s->add_option("--out", ingest.out, "Corpus JSONL output (vocabulary goes to <out>.vocab)");
  s->add_flag("--keep-punct", ingest.keep_punct, "Keep punctuation tokens");
  s->add_option("--stopwords", ingest.stopwords, "File with one stop word per line");
  seed_opts["ingest"] = add_seed(s);

  ClassifyOpts classify;
  s = subs["classify"] = app.add_subcommand("classify", "Categorise alteration spans with the rule cascade");
  s->add_option("--corpus", classify.corpus, "Corpus JSONL");
  s->add_option("--dict", classify.dict, "Lemma dictionary TSV (surface, lemma[, pos])");
  s->add_option("--vectors", classify.vectors, "Word vectors in .vec text format");
  s->add_option("--max-dist", classify.max_dist, "Levenshtein bound for spelling")->capture_default_str();
  s->add_option("--style-threshold", classify.style_threshold, "Cosine distance bound for stylistic")
      ->capture_default_str();
  s->add_flag("--paratext-unknown-hand", classify.unknown_hand,
              "Let spans by undeclared hands count as paratext");
  s->add_option("--patterns", classify.patterns, "Paratext regex file, one per line");
  s->add_option("--out", classify.out, "CSV of doc_id, span_id, category");
  s->add_option("--out-corpus", classify.out_corpus, "Corpus with categories and updated flags");
  s->add_flag("--serial", classify.serial, "Run single-threaded");
  seed_opts["classify"] = add_seed(s);

  TrainOpts trainer;
  s = subs["train"] = app.add_subcommand("train", "Fit the model with collapsed Gibbs sampling");
  s->add_option("--corpus", trainer.corpus, "Corpus JSONL");
  s->add_option("--k", trainer.k, "Number of topics")->capture_default_str();
  s->add_option("--alpha", trainer.alpha, "Symmetric document-topic concentration")->capture_default_str();
  s->add_option("--eta", trainer.eta, "Symmetric topic-word concentration")->capture_default_str();
  s->add_option("--xi", trainer.xi, "Alteration-flag concentration X,Y (or one value)")
      ->capture_default_str();
  s->add_option("--sweeps", trainer.sweeps, "Gibbs sweeps")->capture_default_str();
  s->add_option("--burn-in", trainer.burn_in, "Sweeps discarded before averaging")->capture_default_str();
  s->add_option("--thin", trainer.thin, "Average every n-th post-burn-in sweep")->capture_default_str();
  s->add_flag("--single-sample", trainer.single_sample, "Estimate from the final state only");
  s->add_option("--split", trainer.split, "Evaluation setting s1, s2 or s3")->capture_default_str();
  s->add_option("--test-fraction", trainer.test_fraction, "Held-out token share for s3")
      ->capture_default_str();
  s->add_option("--out", trainer.out, "Model file");
  seed_opts["train"] = add_seed(s);

  FoldOpts suggest;
  s = subs["suggest"] = app.add_subcommand("suggest", "Suggest alteration-prone tokens per group");
  s->add_option("--model", suggest.model, "Model file from train");
  s->add_option("--corpus", suggest.corpus, "Corpus JSONL to fold in");
  s->add_option("--threshold", suggest.threshold, "Suggestion threshold")->capture_default_str();
  s->add_option("--fold-sweeps", suggest.fold_sweeps, "Fold-in sweeps")->capture_default_str();
  s->add_option("--fold-burn-in", suggest.fold_burn_in, "Fold-in burn-in")->capture_default_str();
  s->add_option("--group-by", suggest.group_by, "author, addressee, date or doc_id")->capture_default_str();
  s->add_option("--top", suggest.top, "Words listed per group")->capture_default_str();
  s->add_option("--docs", suggest.docs, "auto, all or test (test side of the model's split)")
      ->capture_default_str();
  s->add_option("--out", suggest.out, "Output file (stdout when absent)");
  s->add_option("--format", suggest.format, "csv, json or text");
  s->add_flag("--serial", suggest.serial, "Run single-threaded");
  seed_opts["suggest"] = add_seed(s);

  FoldOpts evaluator;
  s = subs["eval"] = app.add_subcommand("eval", "Score held-out alteration flags (s3 models)");
  s->add_option("--model", evaluator.model, "Model file trained with --split s3");
  s->add_option("--corpus", evaluator.corpus, "The corpus the model was trained from");
  s->add_option("--threshold", evaluator.threshold, "Suggestion threshold")->capture_default_str();
  s->add_option("--fold-sweeps", evaluator.fold_sweeps, "Fold-in sweeps")->capture_default_str();
  s->add_option("--fold-burn-in", evaluator.fold_burn_in, "Fold-in burn-in")->capture_default_str();
  s->add_option("--group-by", evaluator.group_by, "author, addressee, date or doc_id")
      ->capture_default_str();
  s->add_option("--out", evaluator.out, "Output file (stdout when absent)");
  s->add_option("--format", evaluator.format, "csv, json or text");
  s->add_flag("--serial", evaluator.serial, "Run single-threaded");
  seed_opts["eval"] = add_seed(s);

  SynthOpts synth;
  s = subs["synth"] = app.add_subcommand("synth", "Reconstruction accuracy over a synthetic grid");
  s->add_option("--grid-alpha", synth.alphas, "alpha values")->capture_default_str();
  s->add_option("--grid-eta", synth.etas, "eta values")->capture_default_str();
  s->add_option("--grid-xi", synth.xis, "xi values")->capture_default_str();
  s->add_option("--sizes", synth.sizes, "Token counts per corpus")->capture_default_str();
  s->add_option("--runs", synth.runs, "Runs per cell")->capture_default_str();
  s->add_option("--k", synth.k, "Topics")->capture_default_str();
  s->add_option("--vocab", synth.vocab, "Vocabulary size")->capture_default_str();
  s->add_option("--doc-length", synth.doc_length, "Tokens per document")->capture_default_str();
  s->add_option("--sweeps", synth.sweeps, "Gibbs sweeps per run")->capture_default_str();
  s->add_option("--burn-in", synth.burn_in, "Burn-in sweeps per run")->capture_default_str();
  s->add_option("--flag-rule", synth.rule, "argmax or threshold")->capture_default_str();
  s->add_option("--flag-threshold", synth.flag_threshold, "Threshold for --flag-rule threshold")
      ->capture_default_str();
  s->add_option("--out", synth.out, "Output file (stdout when absent)");
  s->add_option("--format", synth.format, "csv, json or text");
  s->add_flag("--serial", synth.serial, "Run single-threaded");
  seed_opts["synth"] = add_seed(s);

  ReportOpts report;
  s = subs["report"] = app.add_subcommand("report", "Render a CSV report as text or JSON");
  s->add_option("--in", report.in, "CSV written by another subcommand");
  s->add_option("--out", report.out, "Output file (stdout when absent)");
  s->add_option("--format", report.format, "csv, json or text");
  seed_opts["report"] = add_seed(s);

  std::string run_config_path;
  s = subs["run"] = app.add_subcommand("run", "Execute every section of a config file in order");
  s->add_option("--config", run_config_path, "Config file")->required();

  // Config values go in right after the subcommand name so that explicit
  // flags, which come later, win.
  if (config != nullptr && !args.empty() && subs.contains(args.front()) && args.front() != "run") {
    auto injected = config->arguments(args.front());
    args.insert(args.begin() + 1, injected.begin(), injected.end());
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  if (subs["run"]->parsed()) return run_config(RunConfig::load(run_config_path), out, err);

  std::string command;
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) command = name;

  Invocation inv{out, err, command};
  if (seed_opts[command]->count() > 0) {
    inv.seed = seed;
  } else if (const char* env = std::getenv("ALTERLDA_SEED"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      inv.seed = std::stoull(env, &used);
      if (env[used] != '\0') throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorKind::ConfigError, kModule, "ALTERLDA_SEED is not an integer: " + std::string(env));
    }
  }
  {
    std::istringstream dump(subs[command]->config_to_str(true, false));
    for (std::string line; std::getline(dump, line);)
      if (line.rfind("seed=", 0) != 0) inv.settings += line + "\n";
    inv.settings += "seed=" + std::to_string(inv.seed) + "\n";
  }

  if (command == "ingest") run_ingest(ingest, inv);
  else if (command == "classify") run_classify(classify, inv);
  else if (command == "train") run_train(trainer, inv);
  else if (command == "suggest") run_suggest(suggest, inv);
  else if (command == "eval") run_eval(evaluator, inv);
  else if (command == "synth") run_synth(synth, inv);
  else if (command == "report") run_report(report, inv);
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  try {
    auto [config_path, rest] = extract_config(args);
    if (!config_path.empty()) {
      const RunConfig config = RunConfig::load(config_path);
      if (!rest.empty() && rest.front() == "run") return run_config(config, out, err);
      return dispatch(rest, &config, out, err);
    }
    return dispatch(rest, nullptr, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const fs::filesystem_error& e) {
    err << "error: cli-reporting: IoError: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace alterlda::cli

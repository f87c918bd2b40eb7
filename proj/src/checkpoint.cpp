#include "alterlda/checkpoint.hpp"

#include <fstream>
#include <sstream>

#include "alterlda/error.hpp"
#include "json.hpp"

namespace alterlda {

namespace {

constexpr std::string_view kModule = "alterlda-core";
using ojson = nlohmann::ordered_json;

ojson matrix_to_json(const Matrix& m) {
  ojson j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["data"] = m.data();
  return j;
}

Matrix matrix_from_json(const nlohmann::json& j) {
  Matrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  auto data = j.at("data").get<std::vector<double>>();
  if (data.size() != m.data().size())
    throw Error(ErrorKind::FormatError, kModule, "matrix payload has the wrong size");
  m.data() = std::move(data);
  return m;
}

std::string hex64(std::uint64_t value) {
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << value;
  return out.str();
}

}  // namespace

ModelCheckpoint make_checkpoint(const ModelState& state, const PosteriorEstimate& posterior,
                                const SplitSpec& split) {
  ModelCheckpoint ckpt;
  ckpt.hyper = state.hyper();
  ckpt.z = state.assignments();
  ckpt.seed = state.seed();
  ckpt.sweep_index = state.sweep_index();
  std::ostringstream rng;
  rng << state.rng();
  ckpt.rng_state = rng.str();
  ckpt.vocab_hash = state.corpus().vocabulary.hash();
  ckpt.vocabulary = state.corpus().vocabulary.words();
  ckpt.posterior = posterior;
  ckpt.split = split;
  return ckpt;
}

void save_checkpoint(const ModelCheckpoint& ckpt, const std::filesystem::path& path) {
  ojson j;
  j["format"] = "alterlda-model";
  j["format_version"] = ModelCheckpoint::kFormatVersion;
  j["num_topics"] = ckpt.hyper.num_topics;
  j["alpha"] = ckpt.hyper.alpha;
  j["eta"] = ckpt.hyper.eta;
  j["xi"] = ckpt.hyper.xi;
  j["seed"] = ckpt.seed;
  j["sweep_index"] = ckpt.sweep_index;
  j["rng_state"] = ckpt.rng_state;
  j["vocab_hash"] = hex64(ckpt.vocab_hash);
  j["split"] = {{"setting", to_string(ckpt.split.setting)},
                {"test_fraction", ckpt.split.test_fraction ? ojson(*ckpt.split.test_fraction)
                                                           : ojson(nullptr)},
                {"seed", ckpt.split.seed}};
  j["vocabulary"] = ckpt.vocabulary;
  j["z"] = ckpt.z;
  j["beta"] = matrix_to_json(ckpt.posterior.beta);
  j["theta"] = matrix_to_json(ckpt.posterior.theta);
  j["gamma"] = matrix_to_json(ckpt.posterior.gamma);

  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, kModule, "cannot write model " + path.string());
  out << j.dump() << '\n';
}

ModelCheckpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, kModule, "cannot read model " + path.string());
  ModelCheckpoint ckpt;
  try {
    auto j = nlohmann::json::parse(in);
    if (j.value("format", std::string()) != "alterlda-model")
      throw Error(ErrorKind::FormatError, kModule, path.string() + " is not a model file");
    if (j.at("format_version").get<int>() != ModelCheckpoint::kFormatVersion)
      throw Error(ErrorKind::FormatError, kModule, "unsupported model format version");
    ckpt.hyper.num_topics = j.at("num_topics").get<int>();
    ckpt.hyper.alpha = j.at("alpha").get<std::vector<double>>();
    ckpt.hyper.eta = j.at("eta").get<std::vector<double>>();
    ckpt.hyper.xi = j.at("xi").get<std::array<double, 2>>();
    ckpt.seed = j.at("seed").get<std::uint64_t>();
    ckpt.sweep_index = j.at("sweep_index").get<std::uint64_t>();
    ckpt.rng_state = j.at("rng_state").get<std::string>();
    ckpt.vocab_hash = std::stoull(j.at("vocab_hash").get<std::string>(), nullptr, 16);
    const auto& split = j.at("split");
    ckpt.split.setting = split_setting_from_string(split.at("setting").get<std::string>());
    if (!split.at("test_fraction").is_null())
      ckpt.split.test_fraction = split.at("test_fraction").get<double>();
    ckpt.split.seed = split.at("seed").get<std::uint64_t>();
    ckpt.vocabulary = j.at("vocabulary").get<std::vector<std::string>>();
    ckpt.z = j.at("z").get<Assignments>();
    ckpt.posterior.beta = matrix_from_json(j.at("beta"));
    ckpt.posterior.theta = matrix_from_json(j.at("theta"));
    ckpt.posterior.gamma = matrix_from_json(j.at("gamma"));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::FormatError, kModule, path.string() + ": " + e.what());
  }
  ckpt.hyper.validate(ckpt.vocabulary.size());
  return ckpt;
}

void require_vocabulary(const ModelCheckpoint& ckpt, const Vocabulary& vocab) {
  if (vocab.hash() != ckpt.vocab_hash)
    throw Error(ErrorKind::VocabularyMismatch, kModule,
                "corpus vocabulary (hash " + hex64(vocab.hash()) +
                    ") differs from the model's training vocabulary (hash " +
                    hex64(ckpt.vocab_hash) + ")");
}

ModelState restore_state(const ModelCheckpoint& ckpt, std::shared_ptr<const Corpus> corpus) {
  if (!corpus) throw Error(ErrorKind::InvalidArgument, kModule, "restore needs a corpus");
  require_vocabulary(ckpt, corpus->vocabulary);
  Rng rng;
  std::istringstream in(ckpt.rng_state);
  in >> rng;
  if (!in) throw Error(ErrorKind::FormatError, kModule, "unreadable generator state");
  return ModelState(std::move(corpus), ckpt.hyper, ckpt.z, ckpt.seed, std::move(rng),
                    ckpt.sweep_index);
}

}  // namespace alterlda

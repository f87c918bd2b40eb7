#include "alterlda/splits.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "alterlda/error.hpp"
#include "alterlda/rng.hpp"

namespace alterlda {

namespace {

constexpr std::string_view kModule = "eval-splits";

bool has_alteration(const TokenizedDocument& doc) {
  return std::any_of(doc.tokens.begin(), doc.tokens.end(),
                     [](const Token& t) { return t.alt_flag == 1; });
}

TokenizedDocument subset(const TokenizedDocument& doc, const std::vector<std::size_t>& positions) {
  TokenizedDocument out;
  out.doc_id = doc.doc_id;
  out.author = doc.author;
  out.addressee = doc.addressee;
  out.date = doc.date;
  out.spans = doc.spans;
  out.tokens.reserve(positions.size());
  for (std::size_t p : positions) out.tokens.push_back(doc.tokens[p]);
  return out;
}

}  // namespace

std::string_view to_string(SplitSetting setting) noexcept {
  switch (setting) {
    case SplitSetting::S1: return "s1";
    case SplitSetting::S2: return "s2";
    case SplitSetting::S3: return "s3";
  }
  return "s1";
}

SplitSetting split_setting_from_string(std::string_view text) {
  if (text == "s1" || text == "S1") return SplitSetting::S1;
  if (text == "s2" || text == "S2") return SplitSetting::S2;
  if (text == "s3" || text == "S3") return SplitSetting::S3;
  throw Error(ErrorKind::InvalidArgument, kModule, "unknown split setting '" + std::string(text) + "'");
}

void SplitSpec::validate() const {
  if (setting == SplitSetting::S3) {
    if (!test_fraction || !(*test_fraction > 0.0 && *test_fraction < 1.0))
      throw Error(ErrorKind::InvalidArgument, kModule, "S3 needs a test fraction in (0, 1)");
  } else if (test_fraction) {
    throw Error(ErrorKind::InvalidArgument, kModule, "only S3 takes a test fraction");
  }
}

CorpusSplit split(const Corpus& corpus, const SplitSpec& spec) {
  spec.validate();
  std::vector<TokenizedDocument> train, test;
  if (spec.setting == SplitSetting::S1) {
    train = corpus.documents;
  } else {
    const bool any = std::any_of(corpus.documents.begin(), corpus.documents.end(), has_alteration);
    if (!any)
      throw Error(ErrorKind::NoAlteredDocuments, kModule,
                  "no document carries a content-related alteration");
    if (spec.setting == SplitSetting::S2) {
      for (const auto& doc : corpus.documents) (has_alteration(doc) ? train : test).push_back(doc);
    } else {
      const double keep = 1.0 - *spec.test_fraction;
      for (std::size_t m = 0; m < corpus.documents.size(); ++m) {
        const auto& doc = corpus.documents[m];
        if (!has_alteration(doc)) continue;
        const std::size_t n = doc.tokens.size();
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        Rng rng(derive_seed(spec.seed, m));
        // Fisher-Yates with our own index draws, so splits do not depend on
        // the standard library's shuffle.
        for (std::size_t i = n; i > 1; --i) {
          const auto j = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(i));
          std::swap(order[i - 1], order[std::min(j, i - 1)]);
        }
        // Small slack so that e.g. 0.8 * 10 is not rounded up to 9.
        const auto n_train = static_cast<std::size_t>(
            std::min<double>(static_cast<double>(n), std::ceil(keep * static_cast<double>(n) - 1e-9)));
        std::vector<std::size_t> head(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_train));
        std::vector<std::size_t> tail(order.begin() + static_cast<std::ptrdiff_t>(n_train), order.end());
        std::sort(head.begin(), head.end());
        std::sort(tail.begin(), tail.end());
        train.push_back(subset(doc, head));
        test.push_back(subset(doc, tail));
      }
    }
  }
  return CorpusSplit{make_corpus(std::move(train), corpus.vocabulary),
                     make_corpus(std::move(test), corpus.vocabulary)};
}

}  // namespace alterlda

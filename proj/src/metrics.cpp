#include "alterlda/metrics.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "alterlda/error.hpp"

namespace alterlda {

namespace {
constexpr std::string_view kModule = "eval-splits";

EvalRow make_row(std::string group, const std::vector<std::uint8_t>& truth,
                 const std::vector<std::uint8_t>& pred, const std::vector<double>& scores) {
  EvalRow row;
  row.group = std::move(group);
  row.support = truth.size();
  if (truth.empty()) return row;
  row.balanced_accuracy = balanced_accuracy(truth, pred);
  const bool pos = std::find(truth.begin(), truth.end(), 1) != truth.end();
  const bool neg = std::find(truth.begin(), truth.end(), 0) != truth.end();
  if (pos && neg) row.auroc = auroc(truth, scores);
  return row;
}
}  // namespace

double balanced_accuracy(std::span<const std::uint8_t> y_true, std::span<const std::uint8_t> y_pred) {
  if (y_true.empty()) throw Error(ErrorKind::EmptyInput, kModule, "balanced accuracy of nothing");
  if (y_true.size() != y_pred.size())
    throw Error(ErrorKind::InvalidArgument, kModule, "labels and predictions differ in length");
  std::size_t tp = 0, fn = 0, tn = 0, fp = 0;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    if (y_true[i]) {
      (y_pred[i] ? tp : fn)++;
    } else {
      (y_pred[i] ? fp : tn)++;
    }
  }
  double sum = 0.0;
  int classes = 0;
  if (tp + fn > 0) {
    sum += static_cast<double>(tp) / static_cast<double>(tp + fn);
    ++classes;
  }
  if (tn + fp > 0) {
    sum += static_cast<double>(tn) / static_cast<double>(tn + fp);
    ++classes;
  }
  return sum / classes;
}

double auroc(std::span<const std::uint8_t> y_true, std::span<const double> scores) {
  if (y_true.size() != scores.size())
    throw Error(ErrorKind::InvalidArgument, kModule, "labels and scores differ in length");
  std::vector<std::size_t> order(y_true.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

  // Twice the Mann-Whitney U, kept integral so the result is exact.
  std::uint64_t twice_u = 0;
  std::uint64_t negatives_below = 0;
  std::uint64_t positives = 0;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    std::uint64_t pos = 0, neg = 0;
    while (j < order.size() && scores[order[j]] == scores[order[i]]) {
      (y_true[order[j]] ? pos : neg)++;
      ++j;
    }
    twice_u += 2 * pos * negatives_below + pos * neg;
    negatives_below += neg;
    positives += pos;
    i = j;
  }
  if (positives == 0 || negatives_below == 0)
    throw Error(ErrorKind::SingleClass, kModule, "AUROC needs both classes");
  return static_cast<double>(twice_u) / (2.0 * static_cast<double>(positives) *
                                         static_cast<double>(negatives_below));
}

EvalReport evaluate_s3(const std::vector<FoldInResult>& results, const Corpus& test,
                       std::string_view group_by) {
  if (results.size() != test.documents.size())
    throw Error(ErrorKind::InvalidArgument, kModule, "one fold-in result per test document expected");
  struct Pool {
    std::vector<std::uint8_t> truth, pred;
    std::vector<double> scores;
  };
  std::map<std::string, Pool> groups;
  Pool all;
  for (std::size_t d = 0; d < results.size(); ++d) {
    const auto& doc = test.documents[d];
    const auto& r = results[d];
    if (r.doc_id != doc.doc_id || r.token_alt_prob.size() != doc.tokens.size())
      throw Error(ErrorKind::InvalidArgument, kModule,
                  "fold-in result does not match test document '" + doc.doc_id + "'");
    Pool& pool = groups[metadata_value(doc, group_by)];
    for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
      for (Pool* p : {&pool, &all}) {
        p->truth.push_back(doc.tokens[i].alt_flag);
        p->pred.push_back(r.suggested[i]);
        p->scores.push_back(r.token_alt_prob[i]);
      }
    }
  }
  EvalReport report;
  for (auto& [group, pool] : groups)
    report.rows.push_back(make_row(group, pool.truth, pool.pred, pool.scores));
  report.total = make_row("TOTAL", all.truth, all.pred, all.scores);
  return report;
}

}  // namespace alterlda

// Copyright 2026 The VeinForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "veinforge/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace veinforge::eval {

namespace {

void require_both_kinds(const TrialSet& ts) {
  if (ts.n_genuine() == 0 || ts.n_imposter() == 0) {
    fail(ErrorCode::DegenerateTrialSet, "need at least one genuine and one imposter trial (have " +
                                            std::to_string(ts.n_genuine()) + " genuine, " +
                                            std::to_string(ts.n_imposter()) + " imposter)");
  }
}

// Sorted score lists per trial kind; counting scores >= t is a binary search.
struct ScoreIndex {
  std::vector<double> genuine;
  std::vector<double> imposter;

  explicit ScoreIndex(const TrialSet& ts) {
    for (const auto& t : ts.trials()) (t.is_genuine ? genuine : imposter).push_back(t.score);
    std::sort(genuine.begin(), genuine.end());
    std::sort(imposter.begin(), imposter.end());
  }

  static std::size_t at_least(const std::vector<double>& v, double t) {
    return static_cast<std::size_t>(v.end() - std::lower_bound(v.begin(), v.end(), t));
  }

  ConfusionCounts counts(double t) const {
    ConfusionCounts c;
    c.tp = at_least(genuine, t);
    c.fn = genuine.size() - c.tp;
    c.fp = at_least(imposter, t);
    c.tn = imposter.size() - c.fp;
    return c;
  }
};

}  // namespace

ConfusionCounts confusion_at_threshold(const TrialSet& ts, double threshold) {
  ConfusionCounts c;
  for (const auto& t : ts.trials()) {
    const bool accept = t.score >= threshold;
    if (t.is_genuine) (accept ? c.tp : c.fn)++;
    else (accept ? c.fp : c.tn)++;
  }
  return c;
}

Rates rates(const ConfusionCounts& c) {
  if (c.tp + c.fn == 0) fail(ErrorCode::UndefinedRate, "no genuine trials: TPR and FNMR undefined");
  if (c.fp + c.tn == 0) fail(ErrorCode::UndefinedRate, "no imposter trials: FPR and FMR undefined");
  const auto genuine = static_cast<double>(c.tp + c.fn);
  const auto imposter = static_cast<double>(c.fp + c.tn);
  Rates r;
  r.tpr = static_cast<double>(c.tp) / genuine;
  r.fpr = static_cast<double>(c.fp) / imposter;
  r.fmr = static_cast<double>(c.fp) / imposter;
  r.fnmr = static_cast<double>(c.fn) / genuine;
  return r;
}

std::vector<RocPoint> roc_curve(const TrialSet& ts) {
  require_both_kinds(ts);
  const ScoreIndex index(ts);
  std::vector<double> thresholds;
  thresholds.reserve(ts.size() + 1);
  for (const auto& t : ts.trials()) thresholds.push_back(t.score);
  std::sort(thresholds.begin(), thresholds.end(), std::greater<>());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
  thresholds.insert(thresholds.begin(), thresholds.front() + 1.0);

  std::vector<RocPoint> roc;
  roc.reserve(thresholds.size() + 2);
  for (double t : thresholds) {
    const Rates r = rates(index.counts(t));
    roc.push_back({t, r.tpr, r.fpr, r.fmr, r.fnmr});
  }
  if (roc.front().fpr != 0.0 || roc.front().tpr != 0.0) roc.insert(roc.begin(), {roc.front().threshold + 1.0, 0, 0, 0, 1});
  if (roc.back().fpr != 1.0 || roc.back().tpr != 1.0) roc.push_back({roc.back().threshold, 1, 1, 1, 0});
  return roc;
}

double auc_trapezoid(const std::vector<RocPoint>& roc) {
  double area = 0.0;
  for (std::size_t i = 1; i < roc.size(); ++i) {
    if (roc[i].fpr < roc[i - 1].fpr) fail(ErrorCode::UnsortedCurve, "ROC fpr decreases at point " + std::to_string(i));
    area += (roc[i].tpr + roc[i - 1].tpr) * (roc[i].fpr - roc[i - 1].fpr) / 2.0;
  }
  return area;
}

std::vector<double> sweep_thresholds(const TrialSet& ts) {
  std::vector<double> grid;
  grid.reserve(ts.size() + 101);
  for (int i = 0; i <= 100; ++i) grid.push_back(i / 100.0);
  for (const auto& t : ts.trials()) grid.push_back(t.score);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

EerResult eer(const TrialSet& ts) {
  require_both_kinds(ts);
  const ScoreIndex index(ts);
  std::optional<EerResult> best;
  double best_gap = 0.0;
  for (double t : sweep_thresholds(ts)) {
    const Rates r = rates(index.counts(t));
    const double gap = std::abs(r.fmr - r.fnmr);
    if (!best || gap < best_gap) {
      best = EerResult{(r.fmr + r.fnmr) / 2.0, t, r.fmr, r.fnmr};
      best_gap = gap;
    }
  }
  return *best;
}

OperatingPoint operating_threshold(const TrialSet& ts, double target_fmr) {
  if (!(target_fmr >= 0.0 && target_fmr <= 1.0)) fail(ErrorCode::InvalidParam, "target_fmr must lie in [0, 1]");
  require_both_kinds(ts);
  const ScoreIndex index(ts);
  for (double t : sweep_thresholds(ts)) {
    const Rates r = rates(index.counts(t));
    if (r.fmr <= target_fmr) return {t, r.fmr, r.fnmr};
  }
  fail(ErrorCode::Unachievable, "no sweep threshold reaches FMR <= " + std::to_string(target_fmr));
}

double mean_confidence(const std::vector<forest::Prediction>& predictions) {
  if (predictions.empty()) fail(ErrorCode::EmptyInput, "mean confidence of no predictions");
  double sum = 0.0;
  for (const auto& p : predictions) sum += p.confidence;
  return sum / static_cast<double>(predictions.size());
}

std::vector<std::pair<std::string, std::optional<double>>> per_class_auc(const TrialSet& ts) {
  std::map<std::string, TrialSet> by_class;
  for (const auto& t : ts.trials()) by_class[t.claimed_label].add(t);
  std::vector<std::pair<std::string, std::optional<double>>> out;
  for (const auto& [label, subset] : by_class) {
    if (subset.n_genuine() == 0 || subset.n_imposter() == 0) {
      out.emplace_back(label, std::nullopt);
    } else {
      out.emplace_back(label, auc_trapezoid(roc_curve(subset)));
    }
  }
  return out;
}

EvalReport evaluate(const ScoredProbes& scored, double target_fmr) {
  const TrialSet& ts = scored.trials;
  EvalReport report;
  report.roc = roc_curve(ts);
  report.auc = auc_trapezoid(report.roc);
  const EerResult e = eer(ts);
  report.eer = e.eer;
  report.eer_threshold = e.threshold;
  report.target_fmr = target_fmr;
  const OperatingPoint op = operating_threshold(ts, target_fmr);
  report.operating_threshold = op.threshold;
  report.fmr_at_operating = op.fmr;
  report.fnmr_at_operating = op.fnmr;
  report.mean_confidence = mean_confidence(scored.predictions);
  std::size_t correct = 0;
  for (std::size_t i = 0; i < scored.predictions.size(); ++i) {
    correct += scored.predictions[i].label == scored.true_labels[i] ? 1 : 0;
  }
  report.identification_accuracy = static_cast<double>(correct) / static_cast<double>(scored.predictions.size());
  report.n_genuine = ts.n_genuine();
  report.n_imposter = ts.n_imposter();
  report.per_class_auc = per_class_auc(ts);
  double sum = 0.0;
  std::size_t defined = 0;
  for (const auto& [label, auc] : report.per_class_auc) {
    if (auc) {
      sum += *auc;
      ++defined;
    }
  }
  if (defined) report.macro_auc = sum / static_cast<double>(defined);
  return report;
}

}  // namespace veinforge::eval

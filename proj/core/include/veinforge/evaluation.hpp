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

#pragma once

#include "veinforge/forest.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace veinforge::eval {

/// One verification attempt: probe `probe` claims `claimed_label`.
struct Trial {
  std::size_t probe = 0;
  std::string claimed_label;
  bool is_genuine = false;
  double score = 0.0;
};

class TrialSet {
 public:
  TrialSet() = default;
  explicit TrialSet(std::vector<Trial> trials);

  void add(Trial trial);

  const std::vector<Trial>& trials() const noexcept { return trials_; }
  std::size_t size() const noexcept { return trials_.size(); }
  std::size_t n_genuine() const noexcept { return n_genuine_; }
  std::size_t n_imposter() const noexcept { return trials_.size() - n_genuine_; }

 private:
  std::vector<Trial> trials_;
  std::size_t n_genuine_ = 0;
};

/// Imposter claims per probe: every other enrolled label, or k of them drawn
/// by partial Fisher-Yates with SplitMix64(seed ^ probe_index).
struct ImposterPolicy {
  enum class Kind { All, Sampled };
  Kind kind = Kind::All;
  std::size_t k = 0;
  std::uint64_t seed = 0;

  static ImposterPolicy all() { return {}; }
  static ImposterPolicy sampled(std::size_t k, std::uint64_t seed) { return {Kind::Sampled, k, seed}; }
};

struct ScoredProbes {
  TrialSet trials;
  std::vector<forest::Prediction> predictions;  // one per probe
  std::vector<std::string> true_labels;
};

/// Scores every test probe once through the forest; the single vote tally
/// supplies the genuine claim and all imposter claims.
ScoredProbes build_trials(const forest::Forest& forest, const features::FeatureSet& test_set,
                          const ImposterPolicy& policy = ImposterPolicy::all());

struct ConfusionCounts {
  std::size_t tp = 0;
  std::size_t tn = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  bool operator==(const ConfusionCounts&) const = default;
};

/// Accept iff score >= threshold.
ConfusionCounts confusion_at_threshold(const TrialSet& ts, double threshold);

struct Rates {
  double tpr;
  double fpr;
  double fmr;
  double fnmr;
};

/// tpr = TP/(TP+FN), fpr = fmr = FP/(FP+TN), fnmr = FN/(FN+TP).
Rates rates(const ConfusionCounts& c);

struct RocPoint {
  double threshold;
  double tpr;
  double fpr;
  double fmr;
  double fnmr;
};

/// One point per distinct score (descending) plus a sentinel threshold of
/// max_score + 1 that rejects everything, giving the (0, 0) anchor. The lowest
/// score accepts everything, giving (1, 1).
std::vector<RocPoint> roc_curve(const TrialSet& ts);

/// Trapezoidal area over consecutive points; UnsortedCurve if fpr decreases.
double auc_trapezoid(const std::vector<RocPoint>& roc);

/// Thresholds examined by eer() and operating_threshold(): distinct scores
/// together with i / 100 for i = 0..100, ascending and deduplicated.
std::vector<double> sweep_thresholds(const TrialSet& ts);

struct EerResult {
  double eer;
  double threshold;
  double fmr;
  double fnmr;
};

/// Threshold minimizing |fmr - fnmr| over the sweep (ties to the smaller
/// threshold); the reported value is (fmr + fnmr) / 2 there.
EerResult eer(const TrialSet& ts);

struct OperatingPoint {
  double threshold;
  double fmr;
  double fnmr;
};

/// Smallest sweep threshold with fmr <= target_fmr.
OperatingPoint operating_threshold(const TrialSet& ts, double target_fmr);

double mean_confidence(const std::vector<forest::Prediction>& predictions);

struct EvalReport {
  std::vector<RocPoint> roc;
  double auc = 0.0;
  double eer = 0.0;
  double eer_threshold = 0.0;
  double target_fmr = 0.0;
  double operating_threshold = 0.0;
  double fmr_at_operating = 0.0;
  double fnmr_at_operating = 0.0;
  double mean_confidence = 0.0;
  double identification_accuracy = 0.0;
  std::size_t n_genuine = 0;
  std::size_t n_imposter = 0;
  std::vector<std::pair<std::string, std::optional<double>>> per_class_auc;  // null when a class lacks imposters or genuines
  std::optional<double> macro_auc;
};

/// Per-claimed-class AUC; classes missing a genuine or an imposter trial get nullopt.
std::vector<std::pair<std::string, std::optional<double>>> per_class_auc(const TrialSet& ts);

EvalReport evaluate(const ScoredProbes& scored, double target_fmr);

}  // namespace veinforge::eval

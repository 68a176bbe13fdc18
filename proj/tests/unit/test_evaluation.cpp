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

#include "fixtures.hpp"
#include "oracles.hpp"

#include "veinforge/error.hpp"
#include "veinforge/evaluation.hpp"

#include <doctest.h>

#include <set>

using namespace veinforge;
using namespace veinforge::eval;
using veinforge::forest::Forest;
using veinforge::forest::ForestParams;
using veinforge::forest::Tree;
using veinforge::forest::TreeNode;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::IoError;
}

TrialSet make(std::initializer_list<std::pair<bool, double>> items) {
  TrialSet ts;
  std::size_t i = 0;
  for (const auto& [g, s] : items) ts.add({i++, "c", g, s});
  return ts;
}

// One-feature forest whose trees vote by thresholding feature 0 at 0.5, 1.5, ...
Forest staircase(std::size_t classes, std::size_t n_trees) {
  std::vector<Tree> trees;
  for (std::size_t t = 0; t < n_trees; ++t) {
    Tree tree;
    for (std::size_t c = 0; c + 1 < classes; ++c) {
      tree.push_back({false, 0, c + 0.5, static_cast<std::uint32_t>(tree.size() + 1),
                      static_cast<std::uint32_t>(tree.size() + 2), 0, 0});
      tree.push_back({true, 0, 0, 0, 0, static_cast<std::uint32_t>(c), 1});
    }
    tree.push_back({true, 0, 0, 0, 0, static_cast<std::uint32_t>(classes - 1), 1});
    trees.push_back(tree);
  }
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < classes; ++c) labels.push_back("c" + std::to_string(c));
  ForestParams p;
  p.n_trees = n_trees;
  return Forest(trees, labels, 1, p);
}

features::FeatureSet probes(std::size_t classes, std::size_t per_class) {
  features::FeatureSet set;
  for (std::size_t c = 0; c < classes; ++c)
    for (std::size_t i = 0; i < per_class; ++i) set.push_back({{static_cast<float>(c)}, "c" + std::to_string(c), ""});
  return set;
}

}  // namespace

TEST_CASE("trial counting under each imposter policy") {
  const Forest f = staircase(2, 3);
  const auto two = build_trials(f, probes(2, 1));
  CHECK(two.trials.n_genuine() == 2);
  CHECK(two.trials.n_imposter() == 2);

  const Forest g = staircase(5, 4);
  const auto all = build_trials(g, probes(5, 3));
  CHECK(all.trials.n_genuine() == 15);
  CHECK(all.trials.n_imposter() == 15 * 4);
  CHECK(all.predictions.size() == 15);

  const auto a = build_trials(g, probes(5, 3), ImposterPolicy::sampled(3, 11));
  const auto b = build_trials(g, probes(5, 3), ImposterPolicy::sampled(3, 11));
  CHECK(a.trials.n_imposter() == 15 * 3);
  REQUIRE(a.trials.size() == b.trials.size());
  for (std::size_t i = 0; i < a.trials.size(); ++i) {
    CHECK(a.trials.trials()[i].claimed_label == b.trials.trials()[i].claimed_label);
    CHECK(a.trials.trials()[i].score == b.trials.trials()[i].score);
  }
  // Sampled claims are distinct and never the true label.
  for (std::size_t p = 0; p < 15; ++p) {
    std::set<std::string> claims;
    for (const auto& t : a.trials.trials())
      if (t.probe == p && !t.is_genuine) claims.insert(t.claimed_label);
    CHECK(claims.size() == 3);
    CHECK(claims.count(a.true_labels[p]) == 0);
  }
  CHECK(code_of([&] { build_trials(g, {}); }) == ErrorCode::EmptyTestSet);
  CHECK(code_of([&] { build_trials(g, {{{0.0f}, "zz", ""}}); }) == ErrorCode::UnknownLabel);
}

TEST_CASE("confusion counts at boundary and hand-picked thresholds") {
  const TrialSet ts = make({{true, 0.9}, {true, 0.4}, {false, 0.6}, {false, 0.1}});
  CHECK(confusion_at_threshold(ts, 0.5) == ConfusionCounts{1, 1, 1, 1});
  CHECK(confusion_at_threshold(ts, 0.0) == ConfusionCounts{2, 0, 2, 0});
  CHECK(confusion_at_threshold(ts, 0.9000001) == ConfusionCounts{0, 2, 0, 2});
  CHECK(confusion_at_threshold(ts, 0.9) == ConfusionCounts{1, 2, 0, 1});
}

TEST_CASE("rates") {
  const Rates r = rates({9, 10, 0, 1});
  CHECK(r.tpr == 0.9);
  CHECK(r.fnmr == doctest::Approx(0.1));
  CHECK(r.fpr == 0.0);
  CHECK(r.fmr == 0.0);
  SplitMix64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const ConfusionCounts c{1 + rng.below(1000000), rng.below(1000000), rng.below(1000000), 1 + rng.below(1000000)};
    const Rates q = rates(c);
    CHECK(q.fnmr + q.tpr == 1.0);
    CHECK(q.fmr == q.fpr);
  }
  CHECK(code_of([] { rates({0, 1, 1, 0}); }) == ErrorCode::UndefinedRate);
  CHECK(code_of([] { rates({1, 0, 0, 1}); }) == ErrorCode::UndefinedRate);
}

TEST_CASE("roc curve structure") {
  const TrialSet sep = make({{true, 0.9}, {true, 0.8}, {false, 0.3}, {false, 0.1}});
  const auto roc = roc_curve(sep);
  CHECK(roc.front().fpr == 0.0);
  CHECK(roc.front().tpr == 0.0);
  CHECK(roc.back().fpr == 1.0);
  CHECK(roc.back().tpr == 1.0);
  CHECK(roc.size() == 4 + 1);
  bool through_corner = false;
  for (const auto& p : roc) through_corner |= p.fpr == 0.0 && p.tpr == 1.0;
  CHECK(through_corner);
  CHECK(auc_trapezoid(roc) == 1.0);

  const TrialSet same = make({{true, 0.4}, {false, 0.4}, {true, 0.4}});
  const auto flat = roc_curve(same);
  CHECK(flat.size() == 2);
  CHECK(auc_trapezoid(flat) == 0.5);
  CHECK(code_of([] { roc_curve(make({{true, 0.3}})); }) == ErrorCode::DegenerateTrialSet);
}

TEST_CASE("roc points agree with recomputed confusion counts") {
  SplitMix64 rng(50);
  for (int trial = 0; trial < 20; ++trial) {
    const TrialSet ts = fixture::random_trials(rng, 50);
    for (const auto& p : roc_curve(ts)) {
      const auto c = oracle::count_at(ts, p.threshold);
      CHECK(p.tpr == static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn));
      CHECK(p.fpr == static_cast<double>(c.fp) / static_cast<double>(c.fp + c.tn));
    }
  }
}

TEST_CASE("auc trapezoid hand curves and Mann-Whitney agreement") {
  CHECK(auc_trapezoid({{2, 0, 0, 0, 1}, {0, 1, 1, 1, 0}}) == 0.5);
  CHECK(auc_trapezoid({{2, 0, 0, 0, 1}, {0.5, 1, 0, 0, 0}, {0, 1, 1, 1, 0}}) == 1.0);
  CHECK(code_of([] { auc_trapezoid({{1, 0.5, 0.5, 0.5, 0.5}, {0, 1, 0.2, 0.2, 0}}); }) == ErrorCode::UnsortedCurve);
  SplitMix64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const TrialSet ts = fixture::random_trials(rng, 10 + rng.below(200));
    CHECK(std::abs(auc_trapezoid(roc_curve(ts)) - oracle::mann_whitney(ts)) < 1e-9);
  }
}

TEST_CASE("eer") {
  const auto sep = eer(make({{true, 0.9}, {true, 0.8}, {false, 0.3}, {false, 0.1}}));
  CHECK(sep.eer == 0.0);
  CHECK(sep.fmr == 0.0);
  CHECK(sep.fnmr == 0.0);
  CHECK(sep.threshold > 0.3);
  CHECK(sep.threshold <= 0.8);

  const auto mixed = eer(make({{true, 0.2}, {true, 0.6}, {false, 0.2}, {false, 0.6}}));
  CHECK(mixed.eer == 0.5);

  SplitMix64 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const TrialSet ts = fixture::random_trials(rng, 5 + rng.below(100));
    const auto got = eer(ts);
    const auto want = oracle::eer_scan(ts);
    CHECK(std::abs(got.eer - want.eer) <= 1e-12);
    CHECK(got.threshold >= want.lower);
    CHECK(got.threshold <= want.lower + 0.01 + 1e-12);
    if (!want.accept_all) CHECK(got.threshold > want.lower);
  }
}

TEST_CASE("operating threshold") {
  const TrialSet ts = make({{true, 0.9}, {true, 0.7}, {false, 0.5}, {false, 0.2}});
  CHECK(operating_threshold(ts, 1.0).threshold == 0.0);
  const auto zero = operating_threshold(ts, 0.0);
  CHECK(zero.fmr == 0.0);
  CHECK(zero.fnmr == 0.0);
  CHECK(zero.threshold == doctest::Approx(0.51));
  const auto half = operating_threshold(ts, 0.5);
  CHECK(half.threshold == doctest::Approx(0.21));
  CHECK(half.fmr == 0.5);
  CHECK(code_of([&] { operating_threshold(make({{true, 0.5}, {false, 1.0}}), 0.0); }) == ErrorCode::Unachievable);
  CHECK(code_of([&] { operating_threshold(ts, 1.5); }) == ErrorCode::InvalidParam);
}

TEST_CASE("sweep thresholds merge scores with the hundredths grid") {
  const auto sweep = sweep_thresholds(make({{true, 0.255}, {false, 0.5}}));
  CHECK(sweep.size() == 102);
  CHECK(sweep.front() == 0.0);
  CHECK(sweep.back() == 1.0);
  CHECK(std::is_sorted(sweep.begin(), sweep.end()));
  CHECK(std::find(sweep.begin(), sweep.end(), 0.255) != sweep.end());
}

TEST_CASE("mean confidence") {
  forest::Prediction a{"x", 1.0, {}};
  forest::Prediction b{"y", 0.5, {}};
  CHECK(mean_confidence({a, a}) == 1.0);
  CHECK(mean_confidence({b, a}) == 0.75);
  CHECK(code_of([] { mean_confidence({}); }) == ErrorCode::EmptyInput);
}

TEST_CASE("full evaluation report") {
  const Forest f = staircase(4, 5);
  const auto scored = build_trials(f, probes(4, 2));
  const EvalReport r = evaluate(scored, 0.01);
  CHECK(r.auc == 1.0);
  CHECK(r.eer == 0.0);
  CHECK(r.identification_accuracy == 1.0);
  CHECK(r.mean_confidence == 1.0);
  CHECK(r.n_genuine == 8);
  CHECK(r.n_imposter == 24);
  REQUIRE(r.per_class_auc.size() == 4);
  for (const auto& [label, auc] : r.per_class_auc) CHECK(auc == 1.0);
  CHECK(r.macro_auc == 1.0);

  // A claimed class with only genuine trials gets no per-class AUC.
  TrialSet partial = make({{true, 0.9}, {false, 0.1}});
  partial.add({2, "lonely", true, 0.7});
  for (const auto& [label, auc] : per_class_auc(partial)) CHECK((label == "lonely") == !auc.has_value());
}

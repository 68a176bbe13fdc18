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
#include "veinforge/parallel.hpp"
#include "veinforge/rng.hpp"

#include <algorithm>
#include <numeric>

namespace veinforge::eval {

TrialSet::TrialSet(std::vector<Trial> trials) {
  trials_.reserve(trials.size());
  for (auto& t : trials) add(std::move(t));
}

void TrialSet::add(Trial trial) {
  if (trial.is_genuine) ++n_genuine_;
  trials_.push_back(std::move(trial));
}

ScoredProbes build_trials(const forest::Forest& forest, const features::FeatureSet& test_set,
                          const ImposterPolicy& policy) {
  if (test_set.empty()) fail(ErrorCode::EmptyTestSet, "no test probes to score");
  const auto& labels = forest.class_labels();
  const std::size_t n_trees = forest.trees().size();

  std::vector<std::size_t> truth(test_set.size());
  for (std::size_t p = 0; p < test_set.size(); ++p) {
    const auto idx = forest.class_index(test_set[p].label);
    if (!idx) fail(ErrorCode::UnknownLabel, "probe " + std::to_string(p) + " has unenrolled label '" + test_set[p].label + "'");
    truth[p] = *idx;
  }

  std::vector<std::vector<std::uint32_t>> tallies(test_set.size());
  parallel_for(test_set.size(), [&](std::size_t p) { tallies[p] = forest.votes(test_set[p].values); });

  ScoredProbes out;
  out.predictions.reserve(test_set.size());
  for (std::size_t p = 0; p < test_set.size(); ++p) {
    const auto& votes = tallies[p];
    const auto score = [&](std::size_t c) { return static_cast<double>(votes[c]) / static_cast<double>(n_trees); };

    forest::Prediction pred;
    pred.votes = votes;
    const auto best = static_cast<std::size_t>(std::max_element(votes.begin(), votes.end()) - votes.begin());
    pred.label = labels[best];
    pred.confidence = score(best);
    out.predictions.push_back(std::move(pred));
    out.true_labels.push_back(test_set[p].label);

    out.trials.add({p, labels[truth[p]], true, score(truth[p])});

    std::vector<std::size_t> others;
    others.reserve(labels.size() - 1);
    for (std::size_t c = 0; c < labels.size(); ++c) {
      if (c != truth[p]) others.push_back(c);
    }
    if (policy.kind == ImposterPolicy::Kind::Sampled && policy.k < others.size()) {
      SplitMix64 rng(policy.seed ^ static_cast<std::uint64_t>(p));
      for (std::size_t i = 0; i < policy.k; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(others.size() - i));
        std::swap(others[i], others[j]);
      }
      others.resize(policy.k);
      std::sort(others.begin(), others.end());
    }
    for (std::size_t c : others) out.trials.add({p, labels[c], false, score(c)});
  }
  return out;
}

}  // namespace veinforge::eval

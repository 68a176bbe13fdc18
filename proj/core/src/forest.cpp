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

#include "veinforge/forest.hpp"
#include "veinforge/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace veinforge::forest {

Forest::Forest(std::vector<Tree> trees, std::vector<std::string> class_labels, std::size_t dimension,
               ForestParams params)
    : trees_(std::move(trees)), class_labels_(std::move(class_labels)), dimension_(dimension), params_(params) {
  if (trees_.empty() || trees_.size() != params_.n_trees) {
    fail(ErrorCode::FormatError, "forest holds " + std::to_string(trees_.size()) + " trees, params declare " +
                                     std::to_string(params_.n_trees));
  }
}

std::optional<std::size_t> Forest::class_index(std::string_view label) const noexcept {
  for (std::size_t i = 0; i < class_labels_.size(); ++i) {
    if (class_labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::vector<std::uint32_t> Forest::votes(std::span<const float> values) const {
  if (values.size() != dimension_) {
    fail(ErrorCode::DimensionMismatch, "probe dimension " + std::to_string(values.size()) + ", forest expects " +
                                           std::to_string(dimension_));
  }
  std::vector<std::uint32_t> tally(class_labels_.size(), 0);
  for (const Tree& tree : trees_) {
    std::uint32_t node = 0;
    while (!tree[node].leaf) {
      const TreeNode& n = tree[node];
      node = static_cast<double>(values[n.feature]) < n.threshold ? n.left : n.right;
    }
    ++tally[tree[node].label];
  }
  return tally;
}

Prediction Forest::predict(const features::FeatureVector& v) const {
  Prediction p;
  p.votes = votes(v.values);
  const auto best = static_cast<std::size_t>(std::max_element(p.votes.begin(), p.votes.end()) - p.votes.begin());
  p.label = class_labels_[best];
  p.confidence = static_cast<double>(p.votes[best]) / static_cast<double>(trees_.size());
  return p;
}

double Forest::match_score(const features::FeatureVector& v, std::string_view claimed) const {
  const auto idx = class_index(claimed);
  if (!idx) fail(ErrorCode::UnknownLabel, "label '" + std::string(claimed) + "' is not enrolled");
  const auto tally = votes(v.values);
  return static_cast<double>(tally[*idx]) / static_cast<double>(trees_.size());
}

namespace {

class TreeBuilder {
 public:
  TreeBuilder(const LabeledMatrix& data, const ForestParams& params, std::size_t features_per_split, SplitMix64 rng)
      : data_(data), params_(params), mtry_(features_per_split), rng_(rng), perm_(data.cols) {
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
  }

  Tree build() {
    std::vector<std::size_t> rows = bootstrap(data_.rows, rng_);
    grow(rows, 0);
    return std::move(nodes_);
  }

 private:
  std::uint32_t make_leaf(const std::vector<std::size_t>& rows) {
    std::vector<std::uint64_t> counts(data_.n_classes, 0);
    for (auto r : rows) ++counts[data_.labels[r]];
    TreeNode node;
    node.leaf = true;
    node.label = static_cast<std::uint32_t>(std::max_element(counts.begin(), counts.end()) - counts.begin());
    node.count = static_cast<std::uint32_t>(rows.size());
    nodes_.push_back(node);
    return static_cast<std::uint32_t>(nodes_.size() - 1);
  }

  bool pure(const std::vector<std::size_t>& rows) const {
    return std::all_of(rows.begin(), rows.end(), [&](std::size_t r) { return data_.labels[r] == data_.labels[rows.front()]; });
  }

  std::uint32_t grow(const std::vector<std::size_t>& rows, std::size_t depth) {
    if ((params_.max_depth && depth >= *params_.max_depth) || rows.size() < 2 * params_.min_samples_leaf || pure(rows)) {
      return make_leaf(rows);
    }
    for (std::size_t i = 0; i < mtry_; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng_.below(perm_.size() - i));
      std::swap(perm_[i], perm_[j]);
    }
    const auto split = best_split(data_, rows, std::span(perm_.data(), mtry_), params_.min_samples_leaf);
    if (!split) return make_leaf(rows);

    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
    for (auto r : rows) (static_cast<double>(data_.at(r, split->feature)) < split->threshold ? left : right).push_back(r);

    const auto self = static_cast<std::uint32_t>(nodes_.size());
    TreeNode node;
    node.leaf = false;
    node.feature = static_cast<std::uint32_t>(split->feature);
    node.threshold = split->threshold;
    nodes_.push_back(node);
    const std::uint32_t l = grow(left, depth + 1);
    const std::uint32_t r = grow(right, depth + 1);
    nodes_[self].left = l;
    nodes_[self].right = r;
    return self;
  }

  const LabeledMatrix& data_;
  const ForestParams& params_;
  std::size_t mtry_;
  SplitMix64 rng_;
  std::vector<std::size_t> perm_;
  Tree nodes_;
};

}  // namespace

Forest train_forest(const features::FeatureSet& train, const ForestParams& params) {
  if (params.n_trees < 1) fail(ErrorCode::InvalidParam, "n_trees must be at least 1");
  if (params.min_samples_leaf < 1) fail(ErrorCode::InvalidParam, "min_samples_leaf must be at least 1");
  if (params.max_depth && *params.max_depth < 1) fail(ErrorCode::InvalidParam, "max_depth must be positive");
  if (train.size() < 2) fail(ErrorCode::InvalidTrainingSet, "need at least two training samples");

  std::size_t dim = 0;
  try {
    dim = features::check_uniform(train);
  } catch (const Error& e) {
    fail(ErrorCode::InvalidTrainingSet, e.what());
  }

  std::map<std::string, std::uint32_t> index;
  for (const auto& v : train) index.emplace(v.label, 0);
  if (index.size() < 2) fail(ErrorCode::InvalidTrainingSet, "need at least two classes, found " + std::to_string(index.size()));
  std::vector<std::string> labels;
  for (auto& [label, idx] : index) {
    idx = static_cast<std::uint32_t>(labels.size());
    labels.push_back(label);
  }

  LabeledMatrix data;
  data.rows = train.size();
  data.cols = dim;
  data.n_classes = labels.size();
  data.values.reserve(data.rows * dim);
  for (const auto& v : train) {
    data.values.insert(data.values.end(), v.values.begin(), v.values.end());
    data.labels.push_back(index.at(v.label));
  }

  std::size_t mtry = params.features_per_split.value_or(
      static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(dim)))));
  if (mtry < 1) fail(ErrorCode::InvalidParam, "features_per_split must be positive");
  mtry = std::min(mtry, dim);

  std::vector<Tree> trees(params.n_trees);
  parallel_for(params.n_trees, [&](std::size_t t) {
    TreeBuilder builder(data, params, mtry, SplitMix64(params.seed ^ static_cast<std::uint64_t>(t)));
    trees[t] = builder.build();
  });
  return Forest(std::move(trees), std::move(labels), dim, params);
}

}  // namespace veinforge::forest

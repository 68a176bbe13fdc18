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

#include "veinforge/features.hpp"
#include "veinforge/rng.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace veinforge::forest {

/// Gini impurity sum_i q_i (1 - q_i) with q_i = count_i / total.
/// Throws EmptyNode when every count is zero.
double gini(std::span<const std::uint64_t> class_counts);

/// Dense row-major training matrix with class indices per row.
struct LabeledMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<float> values;
  std::vector<std::uint32_t> labels;
  std::size_t n_classes = 0;

  float at(std::size_t r, std::size_t c) const noexcept { return values[r * cols + c]; }
};

struct Split {
  std::size_t feature;
  double threshold;
  double impurity_decrease;
};

/// Best Gini split of `samples` (row indices, repeats allowed) over the
/// candidate features. Thresholds are midpoints between consecutive distinct
/// sorted values; the split minimizing weighted child Gini wins, ties going to
/// the lower feature index and then the lower threshold. Child impurities are
/// compared exactly in integer arithmetic. Returns nullopt when no split
/// strictly reduces impurity or none leaves min_samples_leaf rows per side.
std::optional<Split> best_split(const LabeledMatrix& data, std::span<const std::size_t> samples,
                                std::span<const std::size_t> candidate_features, std::size_t min_samples_leaf = 1);

/// n uniform draws with replacement from [0, n) using rng.below(n).
std::vector<std::size_t> bootstrap(std::size_t n, SplitMix64& rng);

struct ForestParams {
  std::size_t n_trees = 100;
  std::optional<std::size_t> max_depth;           // nullopt: unlimited
  std::size_t min_samples_leaf = 1;
  std::optional<std::size_t> features_per_split;  // nullopt: ceil(sqrt(d))
  std::uint64_t seed = 42;

  bool operator==(const ForestParams&) const = default;
};

/// Flat tree node. Internal nodes route value < threshold to `left`.
struct TreeNode {
  bool leaf = true;
  std::uint32_t feature = 0;
  double threshold = 0.0;
  std::uint32_t left = 0;
  std::uint32_t right = 0;
  std::uint32_t label = 0;   // class index, leaves only
  std::uint32_t count = 0;   // training rows reaching the leaf

  bool operator==(const TreeNode&) const = default;
};

/// Nodes in preorder with the root at index 0; children always follow their parent.
using Tree = std::vector<TreeNode>;

struct Prediction {
  std::string label;
  double confidence = 0.0;           // votes[label] / n_trees
  std::vector<std::uint32_t> votes;  // per class, in Forest::class_labels order
};

class Forest {
 public:
  Forest(std::vector<Tree> trees, std::vector<std::string> class_labels, std::size_t dimension, ForestParams params);

  const std::vector<Tree>& trees() const noexcept { return trees_; }
  const std::vector<std::string>& class_labels() const noexcept { return class_labels_; }
  std::size_t dimension() const noexcept { return dimension_; }
  const ForestParams& params() const noexcept { return params_; }

  std::optional<std::size_t> class_index(std::string_view label) const noexcept;

  /// Per-class vote counts; one leaf per tree.
  std::vector<std::uint32_t> votes(std::span<const float> values) const;

  /// Majority vote; ties go to the earliest label in class_labels.
  Prediction predict(const features::FeatureVector& v) const;

  /// Fraction of trees voting for `claimed`.
  double match_score(const features::FeatureVector& v, std::string_view claimed) const;

  bool operator==(const Forest&) const = default;

 private:
  std::vector<Tree> trees_;
  std::vector<std::string> class_labels_;
  std::size_t dimension_;
  ForestParams params_;
};

/// Grows params.n_trees trees. Tree t draws from SplitMix64(seed ^ t): first
/// the bootstrap sample, then at every node (preorder, left child first) a
/// partial Fisher-Yates pass over a per-tree feature permutation choosing the
/// node's candidate features. Class labels are sorted lexicographically.
Forest train_forest(const features::FeatureSet& train, const ForestParams& params);

/// Versioned binary model format "VFRF"; see forest_io.cpp for the layout.
std::string serialize_forest(const Forest& forest);
Forest deserialize_forest(const std::string& bytes);
void save_forest(const std::filesystem::path& path, const Forest& forest);
Forest load_forest(const std::filesystem::path& path);

}  // namespace veinforge::forest

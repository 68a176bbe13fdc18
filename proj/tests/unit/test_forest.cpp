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
#include "veinforge/forest.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace veinforge;
using namespace veinforge::forest;
using veinforge::features::FeatureSet;
using veinforge::features::FeatureVector;

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

LabeledMatrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols, std::size_t classes, unsigned levels) {
  LabeledMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.n_classes = classes;
  for (std::size_t i = 0; i < rows * cols; ++i) m.values.push_back(static_cast<float>(rng.below(levels)) * 0.5f);
  for (std::size_t i = 0; i < rows; ++i) m.labels.push_back(static_cast<std::uint32_t>(rng.below(classes)));
  return m;
}

FeatureSet blobs(SplitMix64& rng, std::size_t per_class) {
  FeatureSet set;
  for (std::size_t i = 0; i < per_class; ++i) {
    set.push_back({{static_cast<float>(rng.normal() * 0.3), static_cast<float>(rng.normal() * 0.3)}, "A", ""});
    set.push_back({{static_cast<float>(3 + rng.normal() * 0.3), static_cast<float>(3 + rng.normal() * 0.3)}, "B", ""});
  }
  return set;
}

Tree leaf(std::uint32_t label) { return {TreeNode{true, 0, 0.0, 0, 0, label, 1}}; }

ForestParams trees(std::size_t n) {
  ForestParams p;
  p.n_trees = n;
  return p;
}

}  // namespace

TEST_CASE("gini hand values") {
  const std::vector<std::uint64_t> pure{10, 0};
  const std::vector<std::uint64_t> even{5, 5};
  const std::vector<std::uint64_t> skew{1, 3};
  CHECK(gini(pure) == 0.0);
  CHECK(gini(even) == 0.5);
  CHECK(gini(skew) == 0.375);
  CHECK(code_of([] { gini(std::vector<std::uint64_t>{0, 0}); }) == ErrorCode::EmptyNode);
}

TEST_CASE("best_split hand cases") {
  LabeledMatrix m{2, 1, {0.0f, 1.0f}, {0, 1}, 2};
  const std::vector<std::size_t> rows{0, 1};
  const std::vector<std::size_t> feats{0};
  const auto s = best_split(m, rows, feats);
  REQUIRE(s);
  CHECK(s->feature == 0);
  CHECK(s->threshold == 0.5);
  CHECK(s->impurity_decrease == 0.5);

  LabeledMatrix same{3, 1, {0.0f, 1.0f, 2.0f}, {1, 1, 1}, 2};
  CHECK_FALSE(best_split(same, std::vector<std::size_t>{0, 1, 2}, feats));
  LabeledMatrix flat{2, 1, {4.0f, 4.0f}, {0, 1}, 2};
  CHECK_FALSE(best_split(flat, rows, feats));
}

TEST_CASE("best_split equals exhaustive enumeration") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng.below(19);
    const std::size_t d = 1 + rng.below(4);
    const LabeledMatrix m = random_matrix(rng, n, d, 2 + rng.below(3), 2 + rng.below(6));
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(rng.below(n));
    std::vector<std::size_t> feats;
    for (std::size_t f = 0; f < d; ++f)
      if (rng.below(3) != 0 || feats.empty()) feats.push_back(f);
    const std::size_t min_leaf = 1 + rng.below(3);

    const auto got = best_split(m, rows, feats, min_leaf);
    const auto all = oracle::enumerate_splits(m, rows, feats, min_leaf);
    std::map<std::uint32_t, std::size_t> parent;
    for (auto r : rows) ++parent[m.labels[r]];
    const long double parent_gini = oracle::gini_counts(parent, rows.size());

    long double best = parent_gini;
    for (const auto& c : all) best = std::min(best, c.weighted);
    if (!(best < parent_gini - 1e-12L)) {
      CHECK_FALSE(got);
      continue;
    }
    REQUIRE(got);
    // First candidate (feature, then threshold ascending) attaining the minimum.
    const auto first = std::find_if(all.begin(), all.end(), [&](const auto& c) { return c.weighted < best + 1e-12L; });
    CHECK(got->feature == first->feature);
    CHECK(got->threshold == first->threshold);
    CHECK(std::abs(static_cast<long double>(got->impurity_decrease) - (parent_gini - best)) < 1e-9L);
  }
}

TEST_CASE("bootstrap") {
  SplitMix64 a(5);
  CHECK(bootstrap(1, a) == std::vector<std::size_t>{0});
  SplitMix64 b(99);
  SplitMix64 c(99);
  CHECK(bootstrap(50, b) == bootstrap(50, c));

  // 10 items drawn 1000 times: each frequency within [0.05, 0.15].
  std::vector<std::size_t> hist(10, 0);
  SplitMix64 rng(42);
  for (int rep = 0; rep < 100; ++rep)
    for (auto i : bootstrap(10, rng)) ++hist[i];
  for (auto h : hist) {
    CHECK(h >= 50);
    CHECK(h <= 150);
  }
}

TEST_CASE("training separable blobs") {
  SplitMix64 rng(1);
  const FeatureSet data = blobs(rng, 30);
  ForestParams p = trees(10);
  const Forest f = train_forest(data, p);
  CHECK(f.class_labels() == std::vector<std::string>{"A", "B"});
  std::size_t correct = 0;
  for (const auto& v : data) correct += f.predict(v).label == v.label ? 1 : 0;
  CHECK(correct == data.size());
  CHECK(serialize_forest(f) == serialize_forest(train_forest(data, p)));
  p.seed = 43;
  CHECK(serialize_forest(f) != serialize_forest(train_forest(data, p)));
}

TEST_CASE("trained trees respect depth and leaf limits") {
  SplitMix64 rng(9);
  FeatureSet data;
  for (int i = 0; i < 120; ++i) {
    std::vector<float> v(6);
    for (auto& x : v) x = static_cast<float>(rng.normal());
    data.push_back({v, std::string(1, static_cast<char>('a' + rng.below(4))), ""});
  }
  ForestParams p = trees(8);
  p.max_depth = 3;
  p.min_samples_leaf = 4;
  const Forest f = train_forest(data, p);
  for (const Tree& t : f.trees()) {
    // Depth by walking children; leaves hold at least min_samples_leaf rows.
    std::vector<std::size_t> depth(t.size(), 0);
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i].leaf) {
        CHECK(t[i].count >= 4);
        CHECK(depth[i] <= 3);
      } else {
        CHECK(t[i].left > i);
        CHECK(t[i].right > t[i].left);
        depth[t[i].left] = depth[t[i].right] = depth[i] + 1;
      }
    }
  }
}

TEST_CASE("training errors") {
  CHECK(code_of([] { train_forest({{{1.0f}, "A", ""}, {{2.0f}, "A", ""}}, trees(3)); }) ==
        ErrorCode::InvalidTrainingSet);
  CHECK(code_of([] { train_forest({{{1.0f}, "A", ""}}, trees(3)); }) == ErrorCode::InvalidTrainingSet);
  CHECK(code_of([] { train_forest({{{1.0f}, "A", ""}, {{2.0f, 1.0f}, "B", ""}}, trees(3)); }) ==
        ErrorCode::InvalidTrainingSet);
  CHECK(code_of([] { train_forest({{{1.0f}, "A", ""}, {{2.0f}, "B", ""}}, trees(0)); }) == ErrorCode::InvalidParam);
}

TEST_CASE("prediction and vote ties") {
  const Forest one({leaf(1)}, {"A", "B"}, 1, trees(1));
  const auto p1 = one.predict({{0.0f}, "", ""});
  CHECK(p1.label == "B");
  CHECK(p1.confidence == 1.0);

  const Forest four({leaf(0), leaf(0), leaf(1), leaf(1)}, {"A", "B"}, 1, trees(4));
  const auto p4 = four.predict({{0.0f}, "", ""});
  CHECK(p4.label == "A");
  CHECK(p4.confidence == 0.5);
  CHECK(four.match_score({{0.0f}, "", ""}, "B") == 0.5);

  const Forest lopsided({leaf(2), leaf(2), leaf(0)}, {"A", "B", "C"}, 1, trees(3));
  CHECK(lopsided.match_score({{0.0f}, "", ""}, "B") == 0.0);
  CHECK(code_of([&] { lopsided.match_score({{0.0f}, "", ""}, "Z"); }) == ErrorCode::UnknownLabel);
  CHECK(code_of([&] { lopsided.predict({{0.0f, 1.0f}, "", ""}); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("routing sends values below the threshold left") {
  Tree t{TreeNode{false, 0, 0.5, 1, 2, 0, 0}, TreeNode{true, 0, 0, 0, 0, 0, 1}, TreeNode{true, 0, 0, 0, 0, 1, 1}};
  const Forest f({t}, {"L", "R"}, 1, trees(1));
  CHECK(f.predict({{0.49f}, "", ""}).label == "L");
  CHECK(f.predict({{0.5f}, "", ""}).label == "R");
}

TEST_CASE("vote conservation and score consistency") {
  SplitMix64 rng(4);
  FeatureSet data;
  for (int i = 0; i < 60; ++i) {
    data.push_back({{static_cast<float>(rng.normal()), static_cast<float>(rng.normal()), static_cast<float>(rng.normal())},
                    std::to_string(rng.below(3)), ""});
  }
  const Forest f = train_forest(data, trees(15));
  for (int i = 0; i < 50; ++i) {
    const FeatureVector v{{static_cast<float>(rng.normal()), static_cast<float>(rng.normal()), static_cast<float>(rng.normal())}, "", ""};
    const auto p = f.predict(v);
    std::uint32_t sum = 0;
    for (auto c : p.votes) sum += c;
    CHECK(sum == 15);
    CHECK(f.match_score(v, p.label) == p.confidence);
  }
}

TEST_CASE("model file round trip and corruption") {
  SplitMix64 rng(6);
  const FeatureSet data = blobs(rng, 20);
  ForestParams p = trees(7);
  p.max_depth = 5;
  p.features_per_split = 2;
  const Forest f = train_forest(data, p);
  const std::string bytes = serialize_forest(f);
  const Forest g = deserialize_forest(bytes);
  CHECK(g == f);
  for (int i = 0; i < 100; ++i) {
    const FeatureVector v{{static_cast<float>(rng.normal() * 3), static_cast<float>(rng.normal() * 3)}, "", ""};
    const auto a = f.predict(v);
    const auto b = g.predict(v);
    CHECK(a.label == b.label);
    CHECK(a.votes == b.votes);
  }
  CHECK(code_of([&] { deserialize_forest("XXXX" + bytes.substr(4)); }) == ErrorCode::FormatError);
  CHECK(code_of([&] { deserialize_forest(bytes.substr(0, bytes.size() / 2)); }) == ErrorCode::FormatError);
  CHECK(code_of([&] { deserialize_forest(bytes + "\x01"); }) == ErrorCode::FormatError);
  CHECK(code_of([&] { load_forest("/nonexistent/model.vfrf"); }) == ErrorCode::FileNotFound);
}

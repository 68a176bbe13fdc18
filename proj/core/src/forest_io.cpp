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

#include "veinforge/byte_io.hpp"
#include "veinforge/forest.hpp"

#include <fstream>
#include <sstream>

// VFRF model layout, little-endian, no padding:
//
//   "VFRF"  u8 version = 1
//   u32 n_trees  u32 max_depth (0 = unlimited)  u32 min_samples_leaf
//   u32 features_per_split (0 = ceil(sqrt(d)))  u64 seed
//   u32 dimension  u32 n_classes  { u16 len, UTF-8 label } * n_classes
//   per tree: u32 node_count, then nodes in preorder:
//     u8 0 (leaf)   u32 class_index  u32 count
//     u8 1 (split)  u32 feature  f64 threshold  u32 left  u32 right

namespace veinforge::forest {

namespace {

constexpr std::uint8_t kVersion = 1;

}  // namespace

std::string serialize_forest(const Forest& forest) {
  using namespace byte_io;
  std::ostringstream out;
  out.write("VFRF", 4);
  put<std::uint8_t>(out, kVersion);
  const ForestParams& p = forest.params();
  put<std::uint32_t>(out, static_cast<std::uint32_t>(p.n_trees));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(p.max_depth.value_or(0)));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(p.min_samples_leaf));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(p.features_per_split.value_or(0)));
  put<std::uint64_t>(out, p.seed);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(forest.dimension()));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(forest.class_labels().size()));
  for (const auto& label : forest.class_labels()) put_string16(out, label);
  for (const Tree& tree : forest.trees()) {
    put<std::uint32_t>(out, static_cast<std::uint32_t>(tree.size()));
    for (const TreeNode& n : tree) {
      if (n.leaf) {
        put<std::uint8_t>(out, 0);
        put<std::uint32_t>(out, n.label);
        put<std::uint32_t>(out, n.count);
      } else {
        put<std::uint8_t>(out, 1);
        put<std::uint32_t>(out, n.feature);
        put<double>(out, n.threshold);
        put<std::uint32_t>(out, n.left);
        put<std::uint32_t>(out, n.right);
      }
    }
  }
  return out.str();
}

Forest deserialize_forest(const std::string& bytes) {
  using namespace byte_io;
  std::istringstream in(bytes);
  expect_magic(in, "VFRF", "forest model");
  const auto version = get<std::uint8_t>(in, "version");
  if (version != kVersion) fail(ErrorCode::FormatError, "unsupported forest model version " + std::to_string(version));

  ForestParams p;
  p.n_trees = get<std::uint32_t>(in, "n_trees");
  if (const auto depth = get<std::uint32_t>(in, "max_depth")) p.max_depth = depth;
  p.min_samples_leaf = get<std::uint32_t>(in, "min_samples_leaf");
  if (const auto mtry = get<std::uint32_t>(in, "features_per_split")) p.features_per_split = mtry;
  p.seed = get<std::uint64_t>(in, "seed");
  const auto dimension = get<std::uint32_t>(in, "dimension");
  const auto n_classes = get<std::uint32_t>(in, "class count");
  if (p.n_trees == 0 || n_classes < 2 || dimension == 0) fail(ErrorCode::FormatError, "forest header out of range");
  if (p.n_trees > bytes.size() || n_classes > bytes.size()) fail(ErrorCode::FormatError, "forest header counts exceed file size");

  std::vector<std::string> labels(n_classes);
  for (auto& label : labels) label = get_string16(in, "class label");

  std::vector<Tree> trees(p.n_trees);
  for (std::size_t t = 0; t < p.n_trees; ++t) {
    const auto count = get<std::uint32_t>(in, "node count");
    if (count == 0 || count > bytes.size()) fail(ErrorCode::FormatError, "tree " + std::to_string(t) + " node count out of range");
    Tree& tree = trees[t];
    tree.resize(count);
    for (std::uint32_t i = 0; i < count; ++i) {
      TreeNode& n = tree[i];
      const auto kind = get<std::uint8_t>(in, "node kind");
      if (kind == 0) {
        n.leaf = true;
        n.label = get<std::uint32_t>(in, "leaf label");
        n.count = get<std::uint32_t>(in, "leaf count");
        if (n.label >= n_classes) fail(ErrorCode::FormatError, "leaf label out of range");
      } else if (kind == 1) {
        n.leaf = false;
        n.feature = get<std::uint32_t>(in, "split feature");
        n.threshold = get<double>(in, "split threshold");
        n.left = get<std::uint32_t>(in, "left child");
        n.right = get<std::uint32_t>(in, "right child");
        // Preorder storage: children strictly after the parent, so routing terminates.
        if (n.feature >= dimension || n.left <= i || n.right <= i || n.left >= count || n.right >= count) {
          fail(ErrorCode::FormatError, "split node " + std::to_string(i) + " of tree " + std::to_string(t) + " is malformed");
        }
      } else {
        fail(ErrorCode::FormatError, "unknown node kind " + std::to_string(kind));
      }
    }
  }
  expect_end(in, "forest model");
  return Forest(std::move(trees), std::move(labels), dimension, p);
}

void save_forest(const std::filesystem::path& path, const Forest& forest) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::IoError, "cannot write " + path.string());
  const auto bytes = serialize_forest(forest);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

Forest load_forest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::FileNotFound, "cannot open model " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return deserialize_forest(buffer.str());
  } catch (const Error& e) {
    fail(e.code(), path.string() + ": " + e.message());
  }
}

}  // namespace veinforge::forest

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

#include "veinforge/features.hpp"

#include <cmath>

namespace veinforge::features {

std::size_t check_uniform(const FeatureSet& set) {
  if (set.empty()) return 0;
  const std::size_t dim = set.front().values.size();
  if (dim == 0) fail(ErrorCode::DimensionMismatch, "feature vectors must not be empty");
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i].values.size() != dim) {
      fail(ErrorCode::DimensionMismatch, "vector " + std::to_string(i) + " has dimension " +
                                             std::to_string(set[i].values.size()) + ", expected " + std::to_string(dim));
    }
    for (float v : set[i].values) {
      if (!std::isfinite(v)) fail(ErrorCode::FormatError, "vector " + std::to_string(i) + " holds a non-finite value");
    }
  }
  return dim;
}

std::vector<std::size_t> interior_cells(std::size_t extent, std::size_t cells) {
  if (cells == 0) fail(ErrorCode::InvalidParam, "grid must have at least one cell per axis");
  if (extent < 3 || extent - 2 < cells) {
    fail(ErrorCode::InvalidParam, "interior of extent " + std::to_string(extent) + " cannot hold " +
                                      std::to_string(cells) + " cells");
  }
  const std::size_t interior = extent - 2;
  std::vector<std::size_t> bounds(cells + 1);
  for (std::size_t i = 0; i <= cells; ++i) bounds[i] = 1 + i * interior / cells;
  return bounds;
}

namespace {

template <typename Image>
FeatureVector lbp_features_impl(const Image& img, std::size_t grid_cols, std::size_t grid_rows) {
  const auto xs = interior_cells(img.width(), grid_cols);
  const auto ys = interior_cells(img.height(), grid_rows);
  FeatureVector fv;
  fv.source_tag = "lbp";
  fv.values.assign(256 * grid_cols * grid_rows, 0.0f);
  std::vector<std::uint64_t> counts(256);
  for (std::size_t cy = 0; cy < grid_rows; ++cy) {
    for (std::size_t cx = 0; cx < grid_cols; ++cx) {
      std::fill(counts.begin(), counts.end(), 0);
      std::uint64_t total = 0;
      for (std::size_t y = ys[cy]; y < ys[cy + 1]; ++y) {
        for (std::size_t x = xs[cx]; x < xs[cx + 1]; ++x) {
          ++counts[lbp_code(img, x, y)];
          ++total;
        }
      }
      if (total == 0) continue;
      float* cell = fv.values.data() + 256 * (cy * grid_cols + cx);
      for (std::size_t c = 0; c < 256; ++c) {
        cell[c] = static_cast<float>(static_cast<double>(counts[c]) / static_cast<double>(total));
      }
    }
  }
  return fv;
}

}  // namespace

FeatureVector lbp_features(const imaging::GrayImage& img, std::size_t grid_cols, std::size_t grid_rows) {
  return lbp_features_impl(img, grid_cols, grid_rows);
}

FeatureVector lbp_features(const imaging::FloatImage& img, std::size_t grid_cols, std::size_t grid_rows) {
  return lbp_features_impl(img, grid_cols, grid_rows);
}

}  // namespace veinforge::features

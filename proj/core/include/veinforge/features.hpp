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

#include "veinforge/error.hpp"
#include "veinforge/image.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace veinforge::features {

/// Labeled fixed-length feature vector; the matcher's unit of exchange.
struct FeatureVector {
  std::vector<float> values;
  std::string label;
  std::string source_tag;

  bool operator==(const FeatureVector&) const = default;
};

using FeatureSet = std::vector<FeatureVector>;

/// Throws DimensionMismatch unless every vector has the same non-zero length,
/// FormatError if any value is not finite. Returns the common dimension (0
/// for an empty set).
std::size_t check_uniform(const FeatureSet& set);

// ---------------------------------------------------------------------------
// Local binary patterns (radius 1, 8 neighbours, >= comparison).
// Neighbour bits run clockwise from the top-left: TL=0, T=1, TR=2, R=3,
// BR=4, B=5, BL=6, L=7.

template <typename Image>
std::uint8_t lbp_code(const Image& img, std::size_t x, std::size_t y) {
  if (x < 1 || y < 1 || x + 1 >= img.width() || y + 1 >= img.height()) {
    fail(ErrorCode::OutOfBounds, "LBP needs a full 3x3 neighbourhood at (" + std::to_string(x) + ", " +
                                     std::to_string(y) + ")");
  }
  static constexpr int kDx[8] = {-1, 0, 1, 1, 1, 0, -1, -1};
  static constexpr int kDy[8] = {-1, -1, -1, 0, 1, 1, 1, 0};
  const auto center = img.at(x, y);
  std::uint8_t code = 0;
  for (int bit = 0; bit < 8; ++bit) {
    const auto nx = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(x) + kDx[bit]);
    const auto ny = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(y) + kDy[bit]);
    if (img.at(nx, ny) >= center) code = static_cast<std::uint8_t>(code | (1u << bit));
  }
  return code;
}

/// Splits the interior (pixels with a full neighbourhood) into a
/// grid_cols x grid_rows cell grid and concatenates one normalized 256-bin
/// code histogram per cell, row-major. Dimension is 256 * grid_cols * grid_rows.
FeatureVector lbp_features(const imaging::GrayImage& img, std::size_t grid_cols, std::size_t grid_rows);
FeatureVector lbp_features(const imaging::FloatImage& img, std::size_t grid_cols, std::size_t grid_rows);

// ---------------------------------------------------------------------------
// Mean curvature of the intensity surface.

/// Gaussian smoothing used ahead of differentiation. The border is extended by
/// point reflection (f(-k) = 2 f(0) - f(k)) so constant and planar images are
/// reproduced exactly; the kernel radius is ceil(3 sigma), capped at
/// extent - 1 on each axis.
imaging::FloatImage smooth_for_curvature(const imaging::FloatImage& img, double sigma);

/// H = ((1 + fy^2) fxx - 2 fx fy fxy + (1 + fx^2) fyy) / (2 (1 + fx^2 + fy^2)^(3/2))
/// from central differences of the smoothed image; border pixels are 0.
imaging::FloatImage mean_curvature_map(const imaging::FloatImage& img, double sigma);

/// Fraction of interior pixels with value > 0 per cell, row-major.
std::vector<float> positive_cell_fractions(const imaging::FloatImage& map, std::size_t grid_cols,
                                           std::size_t grid_rows);

/// Vein mask H > 0 summarized as per-cell positive fractions.
FeatureVector mc_features(const imaging::FloatImage& img, double sigma, std::size_t grid_cols,
                          std::size_t grid_rows);

/// Cell boundaries used by both extractors: interior [1, extent - 1) cut at
/// 1 + i * (extent - 2) / cells.
std::vector<std::size_t> interior_cells(std::size_t extent, std::size_t cells);

}  // namespace veinforge::features

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

#include "veinforge/image.hpp"

#include <cstdint>

namespace veinforge::imaging {

/// Tile grid and relative clip limit. clip_limit is a multiple of the uniform
/// bin height (tile_pixels / 256); it is converted per tile to an absolute
/// count as max(1, floor(clip_limit * tile_pixels / 256)).
struct ClaheParams {
  std::size_t grid_cols = 8;
  std::size_t grid_rows = 8;
  double clip_limit = 2.0;

  bool operator==(const ClaheParams&) const = default;
};

/// Clips every bin at `clip_limit_abs` and spreads the excess uniformly over
/// all 256 bins in a single pass; the integer remainder goes one count per bin
/// from bin 0 upward. Total mass is conserved exactly.
Histogram clip_histogram(const Histogram& hist, std::int64_t clip_limit_abs);

/// mapping[v] = round(255 * cdf(v)), computed in integer arithmetic.
TileLut equalize_lut(const Histogram& hist);

/// Absolute clip count used for a tile of `tile_pixels` pixels.
std::int64_t absolute_clip_limit(double clip_limit, std::size_t tile_pixels);

/// Contrast-limited adaptive histogram equalization. The image is cut into
/// grid_cols x grid_rows tiles of equal size ceil(W / grid_cols) by
/// ceil(H / grid_rows), mirroring the image past its right and bottom edges
/// (edge pixel not repeated) where the grid overhangs it. Each tile gets a
/// clipped, equalized LUT and every output pixel bilinearly blends the LUTs of
/// the four surrounding tile centers, clamping at the borders.
GrayImage clahe(const GrayImage& img, const ClaheParams& params);

}  // namespace veinforge::imaging

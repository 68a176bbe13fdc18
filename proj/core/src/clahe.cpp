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

#include "veinforge/clahe.hpp"
#include "veinforge/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace veinforge::imaging {

Histogram clip_histogram(const Histogram& hist, std::int64_t clip_limit_abs) {
  if (clip_limit_abs < 1) fail(ErrorCode::InvalidParam, "clip limit must be at least 1");
  const auto limit = static_cast<std::uint64_t>(clip_limit_abs);

  std::array<std::uint64_t, Histogram::kBins> bins = hist.bins();
  std::uint64_t excess = 0;
  for (auto& b : bins) {
    if (b > limit) {
      excess += b - limit;
      b = limit;
    }
  }
  const std::uint64_t per_bin = excess / Histogram::kBins;
  const std::uint64_t remainder = excess % Histogram::kBins;
  for (std::size_t i = 0; i < Histogram::kBins; ++i) {
    bins[i] += per_bin + (i < remainder ? 1 : 0);
  }
  return Histogram(bins);
}

TileLut equalize_lut(const Histogram& hist) {
  const std::uint64_t total = hist.total();
  if (total == 0) fail(ErrorCode::EmptyHistogram, "cannot equalize an empty histogram");
  TileLut lut{};
  std::uint64_t cumulative = 0;
  for (std::size_t v = 0; v < Histogram::kBins; ++v) {
    cumulative += hist[v];
    // round-half-up of 255 * cumulative / total, all quantities non-negative
    __extension__ using u128 = unsigned __int128;
    const auto numerator = static_cast<u128>(2 * 255) * cumulative + total;
    lut[v] = static_cast<std::uint8_t>(numerator / (2 * static_cast<u128>(total)));
  }
  return lut;
}

std::int64_t absolute_clip_limit(double clip_limit, std::size_t tile_pixels) {
  const double raw = std::floor(clip_limit * static_cast<double>(tile_pixels) / 256.0);
  if (!(raw >= 1.0)) return 1;
  if (raw > 9.0e18) return static_cast<std::int64_t>(9.0e18);
  return static_cast<std::int64_t>(raw);
}

namespace {

// Tiles share one size, ceil(extent / tiles); the image is mirrored (without
// repeating the edge pixel) past its right and bottom borders to fill them.
struct Axis {
  std::size_t extent;
  std::size_t tile;
  std::vector<double> center;

  Axis(std::size_t extent_, std::size_t tiles) : extent(extent_), tile((extent_ + tiles - 1) / tiles), center(tiles) {
    for (std::size_t i = 0; i < tiles; ++i) center[i] = static_cast<double>(i * tile) + static_cast<double>(tile - 1) / 2.0;
  }

  std::size_t source(std::size_t padded) const noexcept {
    return padded < extent ? padded : 2 * (extent - 1) - padded;
  }
};

// Lower tile index and blend weight toward the next tile for coordinate `pos`.
struct Blend {
  std::size_t lo;
  std::size_t hi;
  double weight;
};

Blend locate(const Axis& axis, std::size_t pos) {
  const double p = static_cast<double>(pos);
  const std::size_t last = axis.center.size() - 1;
  if (p <= axis.center.front()) return {0, 0, 0.0};
  if (p >= axis.center[last]) return {last, last, 0.0};
  const auto it = std::upper_bound(axis.center.begin(), axis.center.end(), p);
  const auto hi = static_cast<std::size_t>(it - axis.center.begin());
  const std::size_t lo = hi - 1;
  return {lo, hi, (p - axis.center[lo]) / (axis.center[hi] - axis.center[lo])};
}

inline double lerp(double a, double b, double t) noexcept { return a + (b - a) * t; }

}  // namespace

GrayImage clahe(const GrayImage& img, const ClaheParams& params) {
  if (params.grid_cols < 1 || params.grid_rows < 1) fail(ErrorCode::InvalidParam, "CLAHE grid must be at least 1x1");
  if (!(params.clip_limit > 0.0)) fail(ErrorCode::InvalidParam, "CLAHE clip limit must be positive");
  if (params.grid_cols > img.width() || params.grid_rows > img.height()) {
    fail(ErrorCode::InvalidParam, "CLAHE grid " + std::to_string(params.grid_cols) + "x" +
                                      std::to_string(params.grid_rows) + " exceeds image " +
                                      std::to_string(img.width()) + "x" + std::to_string(img.height()));
  }

  const Axis cols(img.width(), params.grid_cols);
  const Axis rows(img.height(), params.grid_rows);

  std::vector<TileLut> luts(params.grid_cols * params.grid_rows);
  for (std::size_t ty = 0; ty < params.grid_rows; ++ty) {
    for (std::size_t tx = 0; tx < params.grid_cols; ++tx) {
      Histogram hist;
      for (std::size_t y = ty * rows.tile; y < (ty + 1) * rows.tile; ++y) {
        for (std::size_t x = tx * cols.tile; x < (tx + 1) * cols.tile; ++x) hist.add(img.at(cols.source(x), rows.source(y)));
      }
      const auto limit = absolute_clip_limit(params.clip_limit, static_cast<std::size_t>(hist.total()));
      luts[ty * params.grid_cols + tx] = equalize_lut(clip_histogram(hist, limit));
    }
  }

  std::vector<Blend> xblend(img.width());
  for (std::size_t x = 0; x < img.width(); ++x) xblend[x] = locate(cols, x);

  GrayImage out(img.width(), img.height());
  for (std::size_t y = 0; y < img.height(); ++y) {
    const Blend by = locate(rows, y);
    const TileLut* top = &luts[by.lo * params.grid_cols];
    const TileLut* bottom = &luts[by.hi * params.grid_cols];
    for (std::size_t x = 0; x < img.width(); ++x) {
      const Blend& bx = xblend[x];
      const std::uint8_t v = img.at(x, y);
      const double upper = lerp(top[bx.lo][v], top[bx.hi][v], bx.weight);
      const double lower = lerp(bottom[bx.lo][v], bottom[bx.hi][v], bx.weight);
      out.at(x, y) = to_byte(lerp(upper, lower, by.weight));
    }
  }
  return out;
}

}  // namespace veinforge::imaging

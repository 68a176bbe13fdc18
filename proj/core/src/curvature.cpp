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

#include <algorithm>
#include <cmath>

namespace veinforge::features {

using imaging::FloatImage;

namespace {

std::vector<double> kernel_for(double sigma, std::size_t extent) {
  auto radius = static_cast<std::size_t>(std::ceil(3.0 * sigma));
  radius = std::min(radius, extent - 1);
  std::vector<double> k(2 * radius + 1);
  double sum = 0.0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    const double d = static_cast<double>(i) - static_cast<double>(radius);
    k[i] = std::exp(-d * d / (2.0 * sigma * sigma));
    sum += k[i];
  }
  for (double& w : k) w /= sum;
  return k;
}

// Point-reflected sample of line[i] for i possibly outside [0, n).
inline double reflected(const double* line, std::ptrdiff_t stride, std::ptrdiff_t n, std::ptrdiff_t i) {
  if (i < 0) return 2.0 * line[0] - line[-i * stride];
  if (i >= n) return 2.0 * line[(n - 1) * stride] - line[(2 * (n - 1) - i) * stride];
  return line[i * stride];
}

void convolve_lines(const double* src, double* dst, std::ptrdiff_t n, std::ptrdiff_t stride,
                    const std::vector<double>& k) {
  const auto r = static_cast<std::ptrdiff_t>(k.size() / 2);
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::ptrdiff_t j = -r; j <= r; ++j) acc += k[static_cast<std::size_t>(j + r)] * reflected(src, stride, n, i + j);
    dst[i * stride] = acc;
  }
}

}  // namespace

FloatImage smooth_for_curvature(const FloatImage& img, double sigma) {
  if (!(sigma > 0.0)) fail(ErrorCode::InvalidParam, "curvature sigma must be positive");
  const auto w = static_cast<std::ptrdiff_t>(img.width());
  const auto h = static_cast<std::ptrdiff_t>(img.height());
  const auto kx = kernel_for(sigma, img.width());
  const auto ky = kernel_for(sigma, img.height());

  FloatImage horizontal(img.width(), img.height());
  for (std::ptrdiff_t y = 0; y < h; ++y) {
    convolve_lines(img.values().data() + y * w, horizontal.values().data() + y * w, w, 1, kx);
  }
  FloatImage out(img.width(), img.height());
  for (std::ptrdiff_t x = 0; x < w; ++x) {
    convolve_lines(horizontal.values().data() + x, out.values().data() + x, h, w, ky);
  }
  return out;
}

FloatImage mean_curvature_map(const FloatImage& img, double sigma) {
  if (img.width() < 5 || img.height() < 5) fail(ErrorCode::InvalidParam, "mean curvature needs at least 5x5 pixels");
  const FloatImage s = smooth_for_curvature(img, sigma);
  FloatImage out(img.width(), img.height(), 0.0);
  for (std::size_t y = 1; y + 1 < img.height(); ++y) {
    for (std::size_t x = 1; x + 1 < img.width(); ++x) {
      const double c = s.at(x, y);
      const double fx = (s.at(x + 1, y) - s.at(x - 1, y)) / 2.0;
      const double fy = (s.at(x, y + 1) - s.at(x, y - 1)) / 2.0;
      const double fxx = s.at(x + 1, y) - 2.0 * c + s.at(x - 1, y);
      const double fyy = s.at(x, y + 1) - 2.0 * c + s.at(x, y - 1);
      const double fxy = (s.at(x + 1, y + 1) - s.at(x + 1, y - 1) - s.at(x - 1, y + 1) + s.at(x - 1, y - 1)) / 4.0;
      const double g = 1.0 + fx * fx + fy * fy;
      out.at(x, y) = ((1.0 + fy * fy) * fxx - 2.0 * fx * fy * fxy + (1.0 + fx * fx) * fyy) / (2.0 * g * std::sqrt(g));
    }
  }
  return out;
}

std::vector<float> positive_cell_fractions(const FloatImage& map, std::size_t grid_cols, std::size_t grid_rows) {
  const auto xs = interior_cells(map.width(), grid_cols);
  const auto ys = interior_cells(map.height(), grid_rows);
  std::vector<float> out(grid_cols * grid_rows, 0.0f);
  for (std::size_t cy = 0; cy < grid_rows; ++cy) {
    for (std::size_t cx = 0; cx < grid_cols; ++cx) {
      std::size_t positive = 0;
      std::size_t total = 0;
      for (std::size_t y = ys[cy]; y < ys[cy + 1]; ++y) {
        for (std::size_t x = xs[cx]; x < xs[cx + 1]; ++x) {
          positive += map.at(x, y) > 0.0 ? 1 : 0;
          ++total;
        }
      }
      if (total) out[cy * grid_cols + cx] = static_cast<float>(static_cast<double>(positive) / static_cast<double>(total));
    }
  }
  return out;
}

FeatureVector mc_features(const FloatImage& img, double sigma, std::size_t grid_cols, std::size_t grid_rows) {
  FeatureVector fv;
  fv.source_tag = "mc";
  fv.values = positive_cell_fractions(mean_curvature_map(img, sigma), grid_cols, grid_rows);
  return fv;
}

}  // namespace veinforge::features

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

#include "veinforge/enhance.hpp"
#include "veinforge/error.hpp"

#include <algorithm>
#include <cmath>

namespace veinforge::imaging {

GrayImage adjust_contrast_brightness(const GrayImage& img, double alpha, double beta) {
  if (!(alpha > 0.0)) fail(ErrorCode::InvalidParam, "contrast gain alpha must be positive");
  GrayImage out(img.width(), img.height());
  auto src = img.pixels();
  auto dst = out.pixels();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = to_byte(alpha * src[i] + beta);
  return out;
}

std::vector<double> gaussian_kernel(double sigma, std::size_t ksize) {
  if (ksize == 0 || ksize % 2 == 0) fail(ErrorCode::InvalidParam, "Gaussian ksize must be odd and positive");
  if (!(sigma > 0.0)) fail(ErrorCode::InvalidParam, "Gaussian sigma must be positive");
  const auto radius = static_cast<std::ptrdiff_t>(ksize / 2);
  std::vector<double> kernel(ksize);
  double sum = 0.0;
  for (std::ptrdiff_t i = -radius; i <= radius; ++i) {
    const double w = std::exp(-static_cast<double>(i * i) / (2.0 * sigma * sigma));
    kernel[static_cast<std::size_t>(i + radius)] = w;
    sum += w;
  }
  for (double& w : kernel) w /= sum;
  return kernel;
}

GrayImage gaussian_filter(const GrayImage& img, double sigma, std::size_t ksize) {
  const std::vector<double> kernel = gaussian_kernel(sigma, ksize);
  const auto radius = static_cast<std::ptrdiff_t>(ksize / 2);
  const auto w = static_cast<std::ptrdiff_t>(img.width());
  const auto h = static_cast<std::ptrdiff_t>(img.height());

  std::vector<double> horizontal(img.size());
  for (std::ptrdiff_t y = 0; y < h; ++y) {
    for (std::ptrdiff_t x = 0; x < w; ++x) {
      double acc = 0.0;
      for (std::ptrdiff_t k = -radius; k <= radius; ++k) {
        const auto sx = std::clamp<std::ptrdiff_t>(x + k, 0, w - 1);
        acc += kernel[static_cast<std::size_t>(k + radius)] * img.at(static_cast<std::size_t>(sx), static_cast<std::size_t>(y));
      }
      horizontal[static_cast<std::size_t>(y * w + x)] = acc;
    }
  }

  GrayImage out(img.width(), img.height());
  for (std::ptrdiff_t y = 0; y < h; ++y) {
    for (std::ptrdiff_t x = 0; x < w; ++x) {
      double acc = 0.0;
      for (std::ptrdiff_t k = -radius; k <= radius; ++k) {
        const auto sy = std::clamp<std::ptrdiff_t>(y + k, 0, h - 1);
        acc += kernel[static_cast<std::size_t>(k + radius)] * horizontal[static_cast<std::size_t>(sy * w + x)];
      }
      out.at(static_cast<std::size_t>(x), static_cast<std::size_t>(y)) = to_byte(acc);
    }
  }
  return out;
}

namespace {

struct Sample {
  std::size_t lo;
  std::size_t hi;
  double frac;
};

std::vector<Sample> sample_axis(std::size_t in, std::size_t out) {
  std::vector<Sample> samples(out);
  const double scale = static_cast<double>(in) / static_cast<double>(out);
  const double max_pos = static_cast<double>(in - 1);
  for (std::size_t i = 0; i < out; ++i) {
    const double pos = std::clamp((static_cast<double>(i) + 0.5) * scale - 0.5, 0.0, max_pos);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    samples[i] = {lo, std::min(lo + 1, in - 1), pos - static_cast<double>(lo)};
  }
  return samples;
}

}  // namespace

GrayImage resize(const GrayImage& img, std::size_t out_w, std::size_t out_h) {
  if (out_w == 0 || out_h == 0) fail(ErrorCode::InvalidParam, "resize target must be at least 1x1");
  const auto xs = sample_axis(img.width(), out_w);
  const auto ys = sample_axis(img.height(), out_h);
  GrayImage out(out_w, out_h);
  for (std::size_t y = 0; y < out_h; ++y) {
    const Sample& sy = ys[y];
    for (std::size_t x = 0; x < out_w; ++x) {
      const Sample& sx = xs[x];
      const double top = img.at(sx.lo, sy.lo) + (img.at(sx.hi, sy.lo) - static_cast<double>(img.at(sx.lo, sy.lo))) * sx.frac;
      const double bottom = img.at(sx.lo, sy.hi) + (img.at(sx.hi, sy.hi) - static_cast<double>(img.at(sx.lo, sy.hi))) * sx.frac;
      out.at(x, y) = to_byte(top + (bottom - top) * sy.frac);
    }
  }
  return out;
}

FloatImage normalize(const GrayImage& img) {
  FloatImage out(img.width(), img.height());
  auto src = img.pixels();
  auto dst = out.values();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i] / 255.0;
  return out;
}

GrayImage enhance(const GrayImage& img, const EnhanceParams& params) {
  GrayImage out = adjust_contrast_brightness(img, params.alpha, params.beta);
  out = clahe(out, params.clahe);
  out = gaussian_filter(out, params.gaussian_sigma, params.gaussian_ksize);
  if (params.resize_width > 0 && params.resize_height > 0) {
    out = resize(out, params.resize_width, params.resize_height);
  }
  return out;
}

}  // namespace veinforge::imaging

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

#include "veinforge/clahe.hpp"
#include "veinforge/image.hpp"

#include <vector>

namespace veinforge::imaging {

/// out = clamp(round(alpha * p + beta), 0, 255). alpha must be positive.
GrayImage adjust_contrast_brightness(const GrayImage& img, double alpha, double beta);

/// Normalized 1-D Gaussian of odd length `ksize`, sampled at integer offsets.
std::vector<double> gaussian_kernel(double sigma, std::size_t ksize);

/// Separable Gaussian blur with edge replication; rounds once at the end.
GrayImage gaussian_filter(const GrayImage& img, double sigma, std::size_t ksize);

/// Bilinear resampling with half-pixel center alignment.
GrayImage resize(const GrayImage& img, std::size_t out_w, std::size_t out_h);

/// p / 255 per pixel.
FloatImage normalize(const GrayImage& img);

struct EnhanceParams {
  double alpha = 1.0;
  double beta = 0.0;
  ClaheParams clahe;
  double gaussian_sigma = 1.0;
  std::size_t gaussian_ksize = 5;
  std::size_t resize_width = 256;   // 0 disables resizing
  std::size_t resize_height = 256;

  bool operator==(const EnhanceParams&) const = default;
};

/// Fixed enhancement chain: contrast/brightness, CLAHE, Gaussian, resize.
GrayImage enhance(const GrayImage& img, const EnhanceParams& params);

}  // namespace veinforge::imaging

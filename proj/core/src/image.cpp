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

#include "veinforge/image.hpp"
#include "veinforge/error.hpp"

#include <numeric>
#include <string>

namespace veinforge::imaging {

namespace {

void check_dims(std::size_t width, std::size_t height, std::size_t count) {
  if (width == 0 || height == 0) {
    fail(ErrorCode::InvalidParam, "image dimensions must be at least 1x1");
  }
  if (count != width * height) {
    fail(ErrorCode::InvalidParam, "pixel buffer holds " + std::to_string(count) + " values, expected " +
                                      std::to_string(width * height));
  }
}

}  // namespace

GrayImage::GrayImage(std::size_t width, std::size_t height, std::uint8_t fill)
    : width_(width), height_(height), pixels_(width * height, fill) {
  check_dims(width, height, pixels_.size());
}

GrayImage::GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  check_dims(width, height, pixels_.size());
}

FloatImage::FloatImage(std::size_t width, std::size_t height, double fill)
    : width_(width), height_(height), values_(width * height, fill) {
  check_dims(width, height, values_.size());
}

FloatImage::FloatImage(std::size_t width, std::size_t height, std::vector<double> values)
    : width_(width), height_(height), values_(std::move(values)) {
  check_dims(width, height, values_.size());
}

Histogram::Histogram(const std::array<std::uint64_t, kBins>& bins)
    : bins_(bins), total_(std::accumulate(bins.begin(), bins.end(), std::uint64_t{0})) {}

Histogram Histogram::of(std::span<const std::uint8_t> pixels) {
  Histogram h;
  for (std::uint8_t p : pixels) h.add(p);
  return h;
}

}  // namespace veinforge::imaging

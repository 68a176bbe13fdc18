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

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace veinforge::imaging {

/// 8-bit grayscale raster stored row-major. Width and height are at least 1
/// and the pixel buffer always holds exactly width * height values.
class GrayImage {
 public:
  GrayImage(std::size_t width, std::size_t height, std::uint8_t fill = 0);
  GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return pixels_.size(); }

  std::uint8_t at(std::size_t x, std::size_t y) const noexcept { return pixels_[y * width_ + x]; }
  std::uint8_t& at(std::size_t x, std::size_t y) noexcept { return pixels_[y * width_ + x]; }

  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
  std::span<std::uint8_t> pixels() noexcept { return pixels_; }

  bool operator==(const GrayImage&) const = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> pixels_;
};

/// Real-valued raster, row-major. Produced by normalize() and consumed by the
/// curvature and LBP extractors.
class FloatImage {
 public:
  FloatImage(std::size_t width, std::size_t height, double fill = 0.0);
  FloatImage(std::size_t width, std::size_t height, std::vector<double> values);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }

  double at(std::size_t x, std::size_t y) const noexcept { return values_[y * width_ + x]; }
  double& at(std::size_t x, std::size_t y) noexcept { return values_[y * width_ + x]; }

  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }

  bool operator==(const FloatImage&) const = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<double> values_;
};

/// 256-bin intensity histogram whose running total always equals the bin sum.
class Histogram {
 public:
  static constexpr std::size_t kBins = 256;

  Histogram() = default;
  explicit Histogram(const std::array<std::uint64_t, kBins>& bins);

  static Histogram of(std::span<const std::uint8_t> pixels);

  void add(std::size_t level, std::uint64_t count = 1) noexcept {
    bins_[level] += count;
    total_ += count;
  }

  std::uint64_t operator[](std::size_t level) const noexcept { return bins_[level]; }
  const std::array<std::uint64_t, kBins>& bins() const noexcept { return bins_; }
  std::uint64_t total() const noexcept { return total_; }

  bool operator==(const Histogram&) const = default;

 private:
  std::array<std::uint64_t, kBins> bins_{};
  std::uint64_t total_ = 0;
};

/// Per-level output mapping; monotone non-decreasing when built by equalize_lut.
using TileLut = std::array<std::uint8_t, Histogram::kBins>;

/// Rounds half away from zero and saturates to [0, 255].
inline std::uint8_t to_byte(double value) noexcept {
  const double r = std::round(value);
  if (!(r > 0.0)) return 0;
  if (r >= 255.0) return 255;
  return static_cast<std::uint8_t>(r);
}

}  // namespace veinforge::imaging

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

#include "veinforge/synth.hpp"
#include "veinforge/error.hpp"
#include "veinforge/parallel.hpp"
#include "veinforge/pgm.hpp"
#include "veinforge/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

namespace veinforge::synth {

namespace {

struct Curve {
  std::vector<double> xs;
  std::vector<double> ys;
  double width;
  double depth;
};

// Catmull-Rom through control points spaced evenly across the image.
Curve make_curve(SplitMix64& rng, double w, double h) {
  constexpr int kControl = 7;
  std::vector<double> cy(kControl);
  const double x0 = rng.uniform() < 0.3 ? w * (0.2 + 0.4 * rng.uniform()) : -0.05 * w;
  double y = h * (0.15 + 0.7 * rng.uniform());
  for (int i = 0; i < kControl; ++i) {
    cy[i] = y;
    y = std::clamp(y + rng.normal() * h * 0.09, 0.05 * h, 0.95 * h);
  }
  const double span = (1.05 * w - x0) / (kControl - 1);
  Curve curve;
  curve.width = 1.2 + 1.3 * rng.uniform();
  curve.depth = 45.0 + 40.0 * rng.uniform();
  const int steps = static_cast<int>(std::ceil(span * 2.0));
  for (int i = 0; i + 1 < kControl; ++i) {
    const double p0 = cy[std::max(i - 1, 0)];
    const double p1 = cy[i];
    const double p2 = cy[i + 1];
    const double p3 = cy[std::min(i + 2, kControl - 1)];
    for (int k = 0; k < steps; ++k) {
      const double t = static_cast<double>(k) / steps;
      const double t2 = t * t;
      const double t3 = t2 * t;
      curve.xs.push_back(x0 + (i + t) * span);
      curve.ys.push_back(0.5 * (2 * p1 + (p2 - p0) * t + (2 * p0 - 5 * p1 + 4 * p2 - p3) * t2 +
                                (3 * p1 - p0 - 3 * p2 + p3) * t3));
    }
  }
  return curve;
}

std::vector<Curve> class_curves(const SynthParams& params, std::size_t c) {
  SplitMix64 rng(params.seed ^ fnv1a64("class:" + subject_name(c)));
  const auto n = 3 + rng.below(4);
  std::vector<Curve> curves;
  for (std::uint64_t i = 0; i < n; ++i) {
    curves.push_back(make_curve(rng, static_cast<double>(params.width), static_cast<double>(params.height)));
  }
  return curves;
}

}  // namespace

std::string subject_name(std::size_t c) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "s%03zu", c + 1);
  return buf;
}

imaging::GrayImage render_sample(const SynthParams& params, std::size_t c, std::size_t s) {
  if (params.width < 8 || params.height < 8) fail(ErrorCode::InvalidParam, "synthetic images must be at least 8x8");
  const auto curves = class_curves(params, c);
  SplitMix64 rng(params.seed ^ fnv1a64("sample:" + subject_name(c) + "#" + std::to_string(s)));
  const double dx = (rng.uniform() * 2.0 - 1.0) * 3.0;
  const double dy = (rng.uniform() * 2.0 - 1.0) * 3.0;
  const double gain = (rng.uniform() * 2.0 - 1.0) * 5.0;

  const std::size_t w = params.width;
  const std::size_t h = params.height;
  std::vector<double> dark(w * h, 0.0);
  std::vector<double> layer(w * h);
  for (const auto& curve : curves) {
    std::fill(layer.begin(), layer.end(), 0.0);
    const double reach = 3.0 * curve.width;
    const double inv = 1.0 / (2.0 * curve.width * curve.width);
    for (std::size_t i = 0; i < curve.xs.size(); ++i) {
      const double px = curve.xs[i] + dx;
      const double py = curve.ys[i] + dy;
      const auto xa = static_cast<long>(std::floor(px - reach));
      const auto xb = static_cast<long>(std::ceil(px + reach));
      const auto ya = static_cast<long>(std::floor(py - reach));
      const auto yb = static_cast<long>(std::ceil(py + reach));
      for (long y = std::max(ya, 0L); y <= std::min(yb, static_cast<long>(h) - 1); ++y) {
        for (long x = std::max(xa, 0L); x <= std::min(xb, static_cast<long>(w) - 1); ++x) {
          const double d2 = (x - px) * (x - px) + (y - py) * (y - py);
          auto& cell = layer[static_cast<std::size_t>(y) * w + static_cast<std::size_t>(x)];
          cell = std::max(cell, curve.depth * std::exp(-d2 * inv));
        }
      }
    }
    for (std::size_t i = 0; i < dark.size(); ++i) dark[i] += layer[i];
  }

  imaging::GrayImage img(w, h);
  for (std::size_t y = 0; y < h; ++y) {
    const double bg = 150.0 + gain + 40.0 * std::sin(std::numbers::pi * (static_cast<double>(y) + 0.5) / h);
    for (std::size_t x = 0; x < w; ++x) {
      img.at(x, y) = imaging::to_byte(bg - dark[y * w + x] + 6.0 * rng.normal());
    }
  }
  return img;
}

dataset::Manifest write_dataset(const std::filesystem::path& dir, const SynthParams& params) {
  if (params.classes == 0 || params.samples == 0) fail(ErrorCode::InvalidParam, "synthetic dataset needs classes and samples");
  dataset::Manifest manifest;
  manifest.dataset_name = "synthetic";
  manifest.base_dir = dir;
  manifest.expected.subjects = params.classes;
  manifest.expected.fingers = 1;
  manifest.expected.images_per_finger = params.samples;
  manifest.expected.total = params.classes * params.samples;
  manifest.expected.width = params.width;
  manifest.expected.height = params.height;
  for (std::size_t c = 0; c < params.classes; ++c) {
    for (std::size_t s = 0; s < params.samples; ++s) {
      char name[32];
      std::snprintf(name, sizeof name, "%02zu.pgm", s + 1);
      dataset::SampleRecord r;
      r.image_path = subject_name(c) + "_1/" + name;
      r.subject_id = subject_name(c);
      r.finger_id = "1";
      r.session = 1;
      r.sample_index = static_cast<int>(s + 1);
      manifest.records.push_back(std::move(r));
    }
  }
  for (std::size_t c = 0; c < params.classes; ++c) std::filesystem::create_directories(dir / (subject_name(c) + "_1"));
  parallel_for(manifest.records.size(), [&](std::size_t i) {
    const auto img = render_sample(params, i / params.samples, i % params.samples);
    imaging::write_pgm(manifest.resolve(manifest.records[i]), img);
  });
  dataset::write_manifest(dir / "manifest.csv", manifest);
  return manifest;
}

}  // namespace veinforge::synth

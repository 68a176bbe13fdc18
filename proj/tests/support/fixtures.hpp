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

// Shared generators and scratch directories for tests.

#include "veinforge/evaluation.hpp"
#include "veinforge/image.hpp"
#include "veinforge/rng.hpp"

#include <filesystem>
#include <string>
#include <unistd.h>

namespace fixture {

class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    path_ = std::filesystem::temp_directory_path() /
            ("veinforge-" + tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter()++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const noexcept { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  static int& counter() {
    static int n = 0;
    return n;
  }
  std::filesystem::path path_;
};

// Pixels drawn from `levels` (>= 2) evenly spaced gray values.
inline veinforge::imaging::GrayImage random_image(veinforge::SplitMix64& rng, std::size_t w, std::size_t h,
                                                  unsigned levels = 256) {
  veinforge::imaging::GrayImage img(w, h);
  const unsigned step = 255 / (levels - 1);
  for (auto& p : img.pixels()) p = static_cast<std::uint8_t>(rng.below(levels) * step);
  return img;
}

// Trial set with scores on a coarse lattice so ties are common; always has at
// least one genuine and one imposter trial.
inline veinforge::eval::TrialSet random_trials(veinforge::SplitMix64& rng, std::size_t n, unsigned lattice = 20) {
  veinforge::eval::TrialSet ts;
  const double shift = rng.uniform() * 0.5;
  for (std::size_t i = 0; i < n; ++i) {
    const bool genuine = i == 0 ? true : (i == 1 ? false : rng.uniform() < 0.4);
    double s = static_cast<double>(rng.below(lattice + 1)) / lattice;
    if (genuine && rng.uniform() < 0.5) s = std::min(1.0, s + shift);
    ts.add({i, genuine ? "g" : "i", genuine, s});
  }
  return ts;
}

}  // namespace fixture

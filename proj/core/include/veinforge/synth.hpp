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

#include "veinforge/dataset.hpp"
#include "veinforge/image.hpp"

#include <cstdint>
#include <filesystem>
#include <string>

namespace veinforge::synth {

struct SynthParams {
  std::size_t classes = 20;
  std::size_t samples = 10;
  std::uint64_t seed = 7;
  std::size_t width = 160;
  std::size_t height = 96;
};

/// Subject id of class c as written to the manifest ("s001", "s002", ...).
std::string subject_name(std::size_t c);

/// Sample s of class c: 3 to 6 dark smooth curves fixed per class, shifted by
/// a per-sample offset of up to 3 px on each axis, plus Gaussian noise.
imaging::GrayImage render_sample(const SynthParams& params, std::size_t c, std::size_t s);

/// Writes <dir>/<subject>_1/<nn>.pgm for every sample together with
/// <dir>/manifest.csv (fv-usm naming) and returns the manifest.
dataset::Manifest write_dataset(const std::filesystem::path& dir, const SynthParams& params);

}  // namespace veinforge::synth

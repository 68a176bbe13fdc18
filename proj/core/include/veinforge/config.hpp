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
#include "veinforge/enhance.hpp"
#include "veinforge/forest.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace veinforge {

struct ExtractConfig {
  std::string method = "lbp";  // lbp | mc | pca-over-lbp | pca-over-mc | file:<path>
  std::size_t lbp_grid_cols = 8;
  std::size_t lbp_grid_rows = 8;
  double mc_sigma = 2.0;
  std::size_t mc_grid_cols = 16;
  std::size_t mc_grid_rows = 16;
  std::size_t pca_k = 32;

  bool operator==(const ExtractConfig&) const = default;
};

struct EvaluateConfig {
  bool sampled_imposters = false;
  std::size_t imposter_k = 10;
  std::uint64_t imposter_seed = 1;
  double target_fmr = 0.01;

  bool operator==(const EvaluateConfig&) const = default;
};

struct SynthConfig {
  std::size_t classes = 20;
  std::size_t samples = 10;
  std::uint64_t seed = 7;
  std::size_t width = 160;
  std::size_t height = 96;

  bool operator==(const SynthConfig&) const = default;
};

/// Whole-pipeline configuration. Text form is one `dotted.key = value` per
/// line; blank lines and lines starting with '#' are ignored. Unknown keys
/// are a ParseError. Every field has a default; see config_keys().
struct PipelineConfig {
  std::string dataset_manifest;  // empty: <output.dir>/synth/manifest.csv unless dataset.root is set
  std::string dataset_root;
  std::string dataset_layout = "flat";
  dataset::SplitSpec split;
  imaging::EnhanceParams enhance;
  ExtractConfig extract;
  forest::ForestParams forest;
  EvaluateConfig evaluate;
  std::optional<double> verify_threshold;
  std::string output_dir = "veinforge-out";
  SynthConfig synth;

  bool operator==(const PipelineConfig&) const = default;
};

/// Every recognised key in canonical order.
std::vector<std::string> config_keys();

/// Sets one field from its text form (ParseError on unknown key or bad value).
void apply_config_value(PipelineConfig& config, std::string_view key, std::string_view value);
std::string config_value(const PipelineConfig& config, std::string_view key);

PipelineConfig parse_config(std::string_view text);
std::string format_config(const PipelineConfig& config);
PipelineConfig load_config(const std::filesystem::path& path);
void save_config(const std::filesystem::path& path, const PipelineConfig& config);

}  // namespace veinforge

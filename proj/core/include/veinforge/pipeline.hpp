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

#include "veinforge/config.hpp"
#include "veinforge/dataset.hpp"
#include "veinforge/evaluation.hpp"
#include "veinforge/feature_file.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace veinforge::pipeline {

/// Artifact locations under output.dir.
struct Paths {
  std::filesystem::path out;
  std::filesystem::path synth_dir() const { return out / "synth"; }
  std::filesystem::path enhanced_dir() const { return out / "enhanced"; }
  std::filesystem::path validation() const { return out / "validation.jsonl"; }
  std::filesystem::path features() const { return out / "features.fvf"; }
  std::filesystem::path pca() const { return out / "pca.vfpc"; }
  std::filesystem::path split() const { return out / "split.json"; }
  std::filesystem::path model() const { return out / "model.vfrf"; }
  std::filesystem::path report() const { return out / "report.json"; }
  std::filesystem::path roc_csv() const { return out / "roc.csv"; }
  std::filesystem::path roc_svg() const { return out / "roc.svg"; }
  std::filesystem::path summary() const { return out / "summary.txt"; }
};

Paths paths(const PipelineConfig& config);

/// dataset.manifest if set, else a manifest generated from dataset.root with
/// dataset.layout, else the synthetic manifest under output.dir.
dataset::Manifest source_manifest(const PipelineConfig& config);

/// Where `enhance` writes the image for a record: the manifest-relative path
/// mirrored under enhanced/ with a .pgm extension.
std::filesystem::path enhanced_path(const PipelineConfig& config, const dataset::Manifest& manifest,
                                    const dataset::SampleRecord& record);

dataset::Manifest cmd_synth(const PipelineConfig& config);

struct EnhanceSummary {
  std::size_t images = 0;
  dataset::ValidationReport validation;
};

/// Validates the source manifest, then enhances every image.
EnhanceSummary cmd_enhance(const PipelineConfig& config);

features::FeatureFile cmd_extract(const PipelineConfig& config);

struct TrainSummary {
  std::size_t train_size = 0;
  std::size_t test_size = 0;
  std::size_t classes = 0;
};

TrainSummary cmd_train(const PipelineConfig& config);

eval::EvalReport cmd_evaluate(const PipelineConfig& config);

struct VerifyResult {
  bool accept = false;
  double score = 0.0;
  double threshold = 0.0;
  std::string predicted;
  double confidence = 0.0;

  /// `ACCEPT|REJECT score=<s> threshold=<t> predicted=<label> confidence=<c>`
  std::string line() const;
};

VerifyResult cmd_verify(const PipelineConfig& config, const std::filesystem::path& probe, const std::string& claim);

}  // namespace veinforge::pipeline

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

#include "veinforge/evaluation.hpp"

#include <string>
#include <vector>

namespace veinforge::report {

inline constexpr const char* kReportSchema = "veinforge.report/1";

/// Report JSON (schema "veinforge.report/1"): scalar metrics, per-class AUC
/// list and the ROC points, with fixed field names.
std::string report_to_json(const eval::EvalReport& report);
eval::EvalReport report_from_json(const std::string& text);

/// Structural and range checks against the report schema. Empty result means valid.
std::vector<std::string> validate_report_json(const std::string& text);

/// `threshold,fpr,tpr,fmr,fnmr` header plus one row per point (%.17g).
std::string roc_csv(const std::vector<eval::RocPoint>& roc);

/// Self-contained SVG line plot of the ROC curve.
std::string roc_svg(const std::vector<eval::RocPoint>& roc, double auc, const std::string& title);

/// Left-aligned plain-text table; columns padded to the widest cell plus two spaces.
std::string format_table(const std::vector<std::string>& headers, const std::vector<std::vector<std::string>>& rows);

/// Two-decimal rendering used by the summary tables.
std::string fixed2(double value);

struct ThresholdRow {
  std::string dataset;
  double threshold;
  double fmr;
  double fnmr;
};

std::string threshold_table(const std::vector<ThresholdRow>& rows);

/// DATABASE column followed by one column per model.
struct MetricRow {
  std::string dataset;
  std::vector<double> values;
};

std::string metric_table(const std::vector<std::string>& models, const std::vector<MetricRow>& rows);

/// Thresholds, confidence and EER tables for a single run.
std::string summary_text(const std::string& dataset, const std::string& model, const eval::EvalReport& report);

}  // namespace veinforge::report

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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace veinforge::dataset {

struct SampleRecord {
  std::string image_path;  // relative paths resolve against Manifest::base_dir
  std::string subject_id;
  std::string finger_id;
  int session = 1;
  int sample_index = 1;

  /// Enrollment class: one per (subject, finger).
  std::string class_id() const { return subject_id + ":" + finger_id; }
  /// Unique key "subject|finger|session|index".
  std::string key() const;

  bool operator==(const SampleRecord&) const = default;
};

/// Declared dataset totals, checked by validate_manifest when present.
struct ExpectedTotals {
  std::optional<std::size_t> subjects;
  std::optional<std::size_t> fingers;  // per subject
  std::optional<std::size_t> images_per_finger;
  std::optional<std::size_t> total;
  std::optional<std::size_t> width;
  std::optional<std::size_t> height;

  bool any() const noexcept { return subjects || fingers || images_per_finger || total || width || height; }
  bool operator==(const ExpectedTotals&) const = default;
};

struct Manifest {
  std::string dataset_name;
  std::vector<SampleRecord> records;
  ExpectedTotals expected;
  std::filesystem::path base_dir;

  std::filesystem::path resolve(const SampleRecord& record) const;
  /// Distinct class ids in order of first appearance.
  std::vector<std::string> classes() const;
};

/// CSV with header `image_path,subject_id,finger_id,session,sample_index`.
/// Lines before the header starting with '#' are comments, except the
/// directives `#dataset=<name>` and `#expected.<field>=<n>` where field is one
/// of subjects, fingers, images_per_finger, total, width, height.
Manifest parse_manifest(std::string_view text, std::filesystem::path base_dir = {});
Manifest load_manifest(const std::filesystem::path& path);
std::string format_manifest(const Manifest& manifest);
void write_manifest(const std::filesystem::path& path, const Manifest& manifest);

enum class Layout { FvUsm, Utfvp, PlusveinFv3, Flat };

Layout parse_layout(std::string_view name);
std::string_view to_string(Layout layout) noexcept;

/// Walks `root` under the given naming convention; traversal is sorted
/// lexicographically so the result is stable on an unchanged tree.
///   flat          root/<class>/<image>                 subject=<class>, finger="0"
///   fv-usm        root/<subject>_<finger>/<image>      e.g. vein001_1/01.pgm
///   utfvp         **/<subject>_<finger>_<sample>[_*].<ext>
///   plusvein-fv3  **/<subject>_<finger>_<session>_<sample>.<ext>
Manifest generate_manifest(const std::filesystem::path& root, Layout layout);

enum class CheckStatus { Pass, Fail, Skipped };

struct ValidationCheck {
  std::string name;
  CheckStatus status;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool passed() const noexcept;
  const ValidationCheck* find(std::string_view name) const noexcept;
  /// One JSON object per line: {"name":..,"status":"pass|fail|skipped","detail":..}
  std::string to_json_lines() const;
};

/// Compares the records against the declared totals. Never throws for data
/// problems; each failed check becomes a report entry. Dimension checks open up
/// to `dimension_samples` evenly spaced images.
ValidationReport validate_manifest(const Manifest& manifest, std::size_t dimension_samples = 5);

struct SplitSpec {
  double train_fraction = 0.67;
  std::uint64_t seed = 42;

  bool operator==(const SplitSpec&) const = default;
};

/// Record indices (ascending manifest order) of each half.
struct SplitIndices {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

/// Per-class stratified split. Each class's records are ordered by
/// (session, sample_index, image_path), shuffled by Fisher-Yates with
/// SplitMix64(seed ^ fnv1a64(class_id)) drawing j = below(i + 1) for i from
/// n-1 down to 1, and the first ceil(train_fraction * n) go to train.
SplitIndices split_indices(const Manifest& manifest, const SplitSpec& spec);

std::pair<Manifest, Manifest> split(const Manifest& manifest, const SplitSpec& spec);

/// Persisted split so training and evaluation can run as separate steps.
/// JSON: {"schema":"veinforge.split/1","train_fraction":f,"seed":s,
///        "train":[{"index":i,"key":k},...],"test":[...]}
struct SplitFile {
  double train_fraction = 0.0;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::size_t, std::string>> train;  // (record index, record key)
  std::vector<std::pair<std::size_t, std::string>> test;

  static SplitFile from(const Manifest& manifest, const SplitSpec& spec, const SplitIndices& indices);
  bool operator==(const SplitFile&) const = default;
};

std::string encode_split_file(const SplitFile& file);
SplitFile decode_split_file(const std::string& text);
void save_split_file(const std::filesystem::path& path, const SplitFile& file);
SplitFile load_split_file(const std::filesystem::path& path);

/// Subset of a manifest keeping the given record indices in order.
Manifest subset(const Manifest& manifest, const std::vector<std::size_t>& indices);

}  // namespace veinforge::dataset

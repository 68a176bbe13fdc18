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

#include "veinforge/features.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace veinforge::features {

/// FVF1 container (little-endian, no padding):
///   "FVF1" | u8 version=1 | u16 tag_len, tag | u32 record_count | u32 dimension
///   then per record: u16 label_len, label | dimension x f32
struct FeatureFile {
  std::string extractor_tag;
  std::size_t dimension = 0;
  FeatureSet records;

  bool operator==(const FeatureFile&) const = default;
};

/// Builds a FeatureFile from vectors, taking the tag from the first vector
/// when `tag` is empty.
FeatureFile make_feature_file(FeatureSet vectors, std::string tag = {});

void write_feature_stream(std::ostream& out, const FeatureFile& file);
FeatureFile read_feature_stream(std::istream& in);

std::string encode_feature_file(const FeatureFile& file);
FeatureFile decode_feature_file(const std::string& bytes);

void write_feature_file(const std::filesystem::path& path, const FeatureFile& file);
FeatureFile read_feature_file(const std::filesystem::path& path);

}  // namespace veinforge::features

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

#include "veinforge/feature_file.hpp"
#include "veinforge/byte_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace veinforge::features {

FeatureFile make_feature_file(FeatureSet vectors, std::string tag) {
  FeatureFile file;
  file.dimension = check_uniform(vectors);
  file.extractor_tag = !tag.empty() ? std::move(tag) : vectors.empty() ? std::string{} : vectors.front().source_tag;
  for (auto& v : vectors) v.source_tag = file.extractor_tag;
  file.records = std::move(vectors);
  return file;
}

void write_feature_stream(std::ostream& out, const FeatureFile& file) {
  const std::size_t dim = check_uniform(file.records);
  if (!file.records.empty() && dim != file.dimension) {
    fail(ErrorCode::DimensionMismatch, "records have dimension " + std::to_string(dim) + ", header declares " +
                                           std::to_string(file.dimension));
  }
  if (file.records.size() > std::numeric_limits<std::uint32_t>::max() ||
      file.dimension > std::numeric_limits<std::uint32_t>::max()) {
    fail(ErrorCode::FormatError, "feature set too large for FVF1");
  }
  out.write("FVF1", 4);
  byte_io::put<std::uint8_t>(out, 1);
  byte_io::put_string16(out, file.extractor_tag);
  byte_io::put<std::uint32_t>(out, static_cast<std::uint32_t>(file.records.size()));
  byte_io::put<std::uint32_t>(out, static_cast<std::uint32_t>(file.dimension));
  for (const auto& r : file.records) {
    byte_io::put_string16(out, r.label);
    for (float v : r.values) byte_io::put(out, v);
  }
  if (!out) fail(ErrorCode::IoError, "failed writing feature file");
}

FeatureFile read_feature_stream(std::istream& in) {
  byte_io::expect_magic(in, "FVF1", "feature file");
  const auto version = byte_io::get<std::uint8_t>(in, "version");
  if (version != 1) fail(ErrorCode::FormatError, "unsupported FVF version " + std::to_string(version));
  FeatureFile file;
  file.extractor_tag = byte_io::get_string16(in, "extractor tag");
  const auto count = byte_io::get<std::uint32_t>(in, "record count");
  file.dimension = byte_io::get<std::uint32_t>(in, "dimension");
  if (count > 0 && file.dimension == 0) fail(ErrorCode::FormatError, "records declared with zero dimension");
  file.records.reserve(std::min<std::size_t>(count, 1u << 16));
  std::vector<char> raw(file.dimension * 4);
  for (std::uint32_t i = 0; i < count; ++i) {
    FeatureVector v;
    v.label = byte_io::get_string16(in, "label");
    v.source_tag = file.extractor_tag;
    if (!in.read(raw.data(), static_cast<std::streamsize>(raw.size()))) {
      fail(ErrorCode::FormatError, "truncated values in record " + std::to_string(i));
    }
    v.values.resize(file.dimension);
    for (std::size_t j = 0; j < file.dimension; ++j) {
      std::uint32_t bits = 0;
      for (std::size_t b = 0; b < 4; ++b) bits |= static_cast<std::uint32_t>(static_cast<unsigned char>(raw[4 * j + b])) << (8 * b);
      v.values[j] = std::bit_cast<float>(bits);
    }
    file.records.push_back(std::move(v));
  }
  byte_io::expect_end(in, "feature file");
  return file;
}

std::string encode_feature_file(const FeatureFile& file) {
  std::ostringstream out;
  write_feature_stream(out, file);
  return out.str();
}

FeatureFile decode_feature_file(const std::string& bytes) {
  std::istringstream in(bytes);
  return read_feature_stream(in);
}

void write_feature_file(const std::filesystem::path& path, const FeatureFile& file) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::IoError, "cannot write " + path.string());
  write_feature_stream(out, file);
}

FeatureFile read_feature_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot open feature file " + path.string());
  try {
    return read_feature_stream(in);
  } catch (const Error& e) {
    fail(e.code(), path.string() + ": " + e.message());
  }
}

}  // namespace veinforge::features

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

#include "veinforge/dataset.hpp"
#include "veinforge/error.hpp"
#include "veinforge/rng.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

namespace veinforge::dataset {

SplitIndices split_indices(const Manifest& m, const SplitSpec& spec) {
  if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0)) {
    fail(ErrorCode::InvalidParam, "train_fraction must lie in (0, 1)");
  }
  std::vector<std::string> order;
  std::map<std::string, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < m.records.size(); ++i) {
    auto id = m.records[i].class_id();
    auto& list = members[id];
    if (list.empty()) order.push_back(id);
    list.push_back(i);
  }

  std::vector<bool> in_train(m.records.size(), false);
  for (const auto& id : order) {
    auto idx = members[id];
    const std::size_t n = idx.size();
    if (n < 2) fail(ErrorCode::UnsplittableClass, "class " + id + " has " + std::to_string(n) + " sample(s)");
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      const auto& ra = m.records[a];
      const auto& rb = m.records[b];
      return std::tie(ra.session, ra.sample_index, ra.image_path) < std::tie(rb.session, rb.sample_index, rb.image_path);
    });
    SplitMix64 rng(spec.seed ^ fnv1a64(id));
    for (std::size_t i = n - 1; i >= 1; --i) std::swap(idx[i], idx[rng.below(i + 1)]);

    // The epsilon keeps products like 0.7 * 10 from rounding up past an integer.
    const auto n_train = static_cast<std::size_t>(std::ceil(spec.train_fraction * static_cast<double>(n) - 1e-9));
    if (n_train < 1 || n_train >= n) {
      fail(ErrorCode::UnsplittableClass, "class " + id + " with " + std::to_string(n) +
                                             " samples leaves an empty half at train_fraction " +
                                             std::to_string(spec.train_fraction));
    }
    for (std::size_t i = 0; i < n_train; ++i) in_train[idx[i]] = true;
  }

  SplitIndices out;
  for (std::size_t i = 0; i < m.records.size(); ++i) (in_train[i] ? out.train : out.test).push_back(i);
  return out;
}

std::pair<Manifest, Manifest> split(const Manifest& m, const SplitSpec& spec) {
  const auto idx = split_indices(m, spec);
  return {subset(m, idx.train), subset(m, idx.test)};
}

}  // namespace veinforge::dataset

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace veinforge::dataset {

SplitFile SplitFile::from(const Manifest& m, const SplitSpec& spec, const SplitIndices& indices) {
  SplitFile f;
  f.train_fraction = spec.train_fraction;
  f.seed = spec.seed;
  for (auto i : indices.train) f.train.emplace_back(i, m.records[i].key());
  for (auto i : indices.test) f.test.emplace_back(i, m.records[i].key());
  return f;
}

std::string encode_split_file(const SplitFile& f) {
  nlohmann::ordered_json j;
  j["schema"] = "veinforge.split/1";
  j["train_fraction"] = f.train_fraction;
  j["seed"] = f.seed;
  const auto half = [](const auto& entries) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [index, key] : entries) arr.push_back({{"index", index}, {"key", key}});
    return arr;
  };
  j["train"] = half(f.train);
  j["test"] = half(f.test);
  return j.dump(2) + "\n";
}

SplitFile decode_split_file(const std::string& text) {
  try {
    const auto j = nlohmann::ordered_json::parse(text);
    if (j.at("schema") != "veinforge.split/1") fail(ErrorCode::FormatError, "unknown split schema");
    SplitFile f;
    f.train_fraction = j.at("train_fraction").get<double>();
    f.seed = j.at("seed").get<std::uint64_t>();
    const auto half = [](const nlohmann::ordered_json& arr) {
      std::vector<std::pair<std::size_t, std::string>> out;
      for (const auto& e : arr) out.emplace_back(e.at("index").get<std::size_t>(), e.at("key").get<std::string>());
      return out;
    };
    f.train = half(j.at("train"));
    f.test = half(j.at("test"));
    return f;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::FormatError, std::string("malformed split file: ") + e.what());
  }
}

void save_split_file(const std::filesystem::path& path, const SplitFile& f) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::IoError, "cannot write " + path.string());
  out << encode_split_file(f);
}

SplitFile load_split_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::FileNotFound, "cannot open split file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return decode_split_file(buffer.str());
}

}  // namespace veinforge::dataset

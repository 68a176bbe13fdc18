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

#include "veinforge/config.hpp"
#include "veinforge/error.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

namespace veinforge {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, const char* expected) {
  fail(ErrorCode::ParseError, "config key " + std::string(key) + ": '" + std::string(value) + "' is not " + expected);
}

template <typename T>
T parse_integer(std::string_view key, std::string_view value) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) bad_value(key, value, "an unsigned integer");
  return out;
}

double parse_real(std::string_view key, std::string_view value) {
  const std::string text(value);
  char* end = nullptr;
  const double out = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(out)) bad_value(key, value, "a finite number");
  return out;
}

std::string real_text(double v) {
  // Shortest text that parses back to the same double.
  char buf[32];
  const auto end = std::to_chars(buf, buf + sizeof buf, v).ptr;
  return std::string(buf, end);
}

struct Field {
  const char* key;
  std::function<std::string(const PipelineConfig&)> get;
  std::function<void(PipelineConfig&, std::string_view)> set;
};

#define VF_STRING(KEY, MEMBER)                                                    \
  Field{KEY, [](const PipelineConfig& c) { return c.MEMBER; },                    \
        [](PipelineConfig& c, std::string_view v) { c.MEMBER = std::string(v); }}
#define VF_SIZE(KEY, MEMBER)                                                      \
  Field{KEY, [](const PipelineConfig& c) { return std::to_string(c.MEMBER); },    \
        [](PipelineConfig& c, std::string_view v) { c.MEMBER = parse_integer<std::size_t>(KEY, v); }}
#define VF_U64(KEY, MEMBER)                                                       \
  Field{KEY, [](const PipelineConfig& c) { return std::to_string(c.MEMBER); },    \
        [](PipelineConfig& c, std::string_view v) { c.MEMBER = parse_integer<std::uint64_t>(KEY, v); }}
#define VF_REAL(KEY, MEMBER)                                                      \
  Field{KEY, [](const PipelineConfig& c) { return real_text(c.MEMBER); },         \
        [](PipelineConfig& c, std::string_view v) { c.MEMBER = parse_real(KEY, v); }}

const std::vector<Field>& fields() {
  static const std::vector<Field> table = {
      VF_STRING("dataset.manifest", dataset_manifest),
      VF_STRING("dataset.root", dataset_root),
      VF_STRING("dataset.layout", dataset_layout),
      VF_REAL("split.train_fraction", split.train_fraction),
      VF_U64("split.seed", split.seed),
      VF_REAL("enhance.alpha", enhance.alpha),
      VF_REAL("enhance.beta", enhance.beta),
      VF_SIZE("enhance.clahe.grid_cols", enhance.clahe.grid_cols),
      VF_SIZE("enhance.clahe.grid_rows", enhance.clahe.grid_rows),
      VF_REAL("enhance.clahe.clip_limit", enhance.clahe.clip_limit),
      VF_REAL("enhance.gaussian.sigma", enhance.gaussian_sigma),
      VF_SIZE("enhance.gaussian.ksize", enhance.gaussian_ksize),
      VF_SIZE("enhance.resize.width", enhance.resize_width),
      VF_SIZE("enhance.resize.height", enhance.resize_height),
      VF_STRING("extract.method", extract.method),
      VF_SIZE("extract.lbp.grid_cols", extract.lbp_grid_cols),
      VF_SIZE("extract.lbp.grid_rows", extract.lbp_grid_rows),
      VF_REAL("extract.mc.sigma", extract.mc_sigma),
      VF_SIZE("extract.mc.grid_cols", extract.mc_grid_cols),
      VF_SIZE("extract.mc.grid_rows", extract.mc_grid_rows),
      VF_SIZE("extract.pca.k", extract.pca_k),
      VF_SIZE("forest.n_trees", forest.n_trees),
      Field{"forest.max_depth",
            [](const PipelineConfig& c) { return c.forest.max_depth ? std::to_string(*c.forest.max_depth) : "unlimited"; },
            [](PipelineConfig& c, std::string_view v) {
              if (v == "unlimited") c.forest.max_depth.reset();
              else c.forest.max_depth = parse_integer<std::size_t>("forest.max_depth", v);
            }},
      VF_SIZE("forest.min_samples_leaf", forest.min_samples_leaf),
      Field{"forest.features_per_split",
            [](const PipelineConfig& c) {
              return c.forest.features_per_split ? std::to_string(*c.forest.features_per_split) : "sqrt";
            },
            [](PipelineConfig& c, std::string_view v) {
              if (v == "sqrt") c.forest.features_per_split.reset();
              else c.forest.features_per_split = parse_integer<std::size_t>("forest.features_per_split", v);
            }},
      VF_U64("forest.seed", forest.seed),
      Field{"evaluate.imposters",
            [](const PipelineConfig& c) { return std::string(c.evaluate.sampled_imposters ? "sampled" : "all"); },
            [](PipelineConfig& c, std::string_view v) {
              if (v == "all") c.evaluate.sampled_imposters = false;
              else if (v == "sampled") c.evaluate.sampled_imposters = true;
              else bad_value("evaluate.imposters", v, "'all' or 'sampled'");
            }},
      VF_SIZE("evaluate.imposter_k", evaluate.imposter_k),
      VF_U64("evaluate.imposter_seed", evaluate.imposter_seed),
      VF_REAL("evaluate.target_fmr", evaluate.target_fmr),
      Field{"verify.threshold",
            [](const PipelineConfig& c) { return c.verify_threshold ? real_text(*c.verify_threshold) : "auto"; },
            [](PipelineConfig& c, std::string_view v) {
              if (v == "auto") c.verify_threshold.reset();
              else c.verify_threshold = parse_real("verify.threshold", v);
            }},
      VF_STRING("output.dir", output_dir),
      VF_SIZE("synth.classes", synth.classes),
      VF_SIZE("synth.samples", synth.samples),
      VF_U64("synth.seed", synth.seed),
      VF_SIZE("synth.width", synth.width),
      VF_SIZE("synth.height", synth.height),
  };
  return table;
}

#undef VF_STRING
#undef VF_SIZE
#undef VF_U64
#undef VF_REAL

const Field& field(std::string_view key) {
  for (const auto& f : fields()) {
    if (key == f.key) return f;
  }
  fail(ErrorCode::ParseError, "unknown config key '" + std::string(key) + "'");
}

}  // namespace

std::vector<std::string> config_keys() {
  std::vector<std::string> keys;
  for (const auto& f : fields()) keys.emplace_back(f.key);
  return keys;
}

void apply_config_value(PipelineConfig& config, std::string_view key, std::string_view value) {
  field(key).set(config, trim(value));
}

std::string config_value(const PipelineConfig& config, std::string_view key) { return field(key).get(config); }

PipelineConfig parse_config(std::string_view text) {
  PipelineConfig config;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = trim(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      fail(ErrorCode::ParseError, "config line " + std::to_string(line_no) + ": expected key = value");
    }
    apply_config_value(config, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  return config;
}

std::string format_config(const PipelineConfig& config) {
  std::string out;
  for (const auto& f : fields()) {
    const std::string value = f.get(config);
    if (value.find_first_of("\n\r") != std::string::npos || trim(value).size() != value.size()) {
      fail(ErrorCode::InvalidParam, std::string("config value for ") + f.key + " cannot be written losslessly");
    }
    out += f.key;
    out += " = ";
    out += value;
    out += '\n';
  }
  return out;
}

PipelineConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::FileNotFound, "cannot open config " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

void save_config(const std::filesystem::path& path, const PipelineConfig& config) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::IoError, "cannot write " + path.string());
  out << format_config(config);
}

}  // namespace veinforge

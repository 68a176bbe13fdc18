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

#include "veinforge/pipeline.hpp"
#include "veinforge/enhance.hpp"
#include "veinforge/error.hpp"
#include "veinforge/features.hpp"
#include "veinforge/forest.hpp"
#include "veinforge/parallel.hpp"
#include "veinforge/pca.hpp"
#include "veinforge/pgm.hpp"
#include "veinforge/report.hpp"
#include "veinforge/synth.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace veinforge::pipeline {

namespace fs = std::filesystem;

namespace {

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::IoError, "cannot write " + path.string());
  out << text;
  if (!out) fail(ErrorCode::IoError, "short write to " + path.string());
}

std::string read_text(const fs::path& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::FileNotFound, std::string("missing ") + what + ": " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void require(const fs::path& path, const char* what) {
  if (!fs::exists(path)) fail(ErrorCode::FileNotFound, std::string("missing ") + what + ": " + path.string());
}

struct Method {
  std::string base;  // lbp or mc
  bool pca = false;
};

Method parse_method(const std::string& method) {
  if (method == "lbp" || method == "mc") return {method, false};
  if (method == "pca-over-lbp") return {"lbp", true};
  if (method == "pca-over-mc") return {"mc", true};
  fail(ErrorCode::InvalidParam, "unknown extract.method '" + method + "'");
}

bool is_file_method(const std::string& method) { return method.rfind("file:", 0) == 0; }

features::FeatureVector extract_base(const PipelineConfig& config, const std::string& base,
                                     const imaging::GrayImage& img) {
  const auto& e = config.extract;
  if (base == "lbp") return features::lbp_features(img, e.lbp_grid_cols, e.lbp_grid_rows);
  return features::mc_features(imaging::normalize(img), e.mc_sigma, e.mc_grid_cols, e.mc_grid_rows);
}

features::FeatureSet load_feature_set(const PipelineConfig& config, const dataset::Manifest& manifest) {
  const Paths p = paths(config);
  require(p.features(), "feature file (run extract first)");
  auto file = features::read_feature_file(p.features());
  if (file.records.size() != manifest.records.size()) {
    fail(ErrorCode::DimensionMismatch, "feature file has " + std::to_string(file.records.size()) +
                                           " records but the manifest has " + std::to_string(manifest.records.size()));
  }
  for (std::size_t i = 0; i < manifest.records.size(); ++i) {
    if (file.records[i].label != manifest.records[i].class_id()) {
      fail(ErrorCode::DimensionMismatch, "feature record " + std::to_string(i) + " is labeled '" +
                                             file.records[i].label + "', manifest says '" +
                                             manifest.records[i].class_id() + "'");
    }
  }
  return std::move(file.records);
}

dataset::SplitFile load_checked_split(const PipelineConfig& config, const dataset::Manifest& manifest) {
  const Paths p = paths(config);
  require(p.split(), "split file (run train first)");
  auto sf = dataset::load_split_file(p.split());
  auto check = [&](const std::vector<std::pair<std::size_t, std::string>>& part) {
    for (const auto& [index, key] : part) {
      if (index >= manifest.records.size() || manifest.records[index].key() != key) {
        fail(ErrorCode::DimensionMismatch, "split file entry " + key + " does not match the manifest");
      }
    }
  };
  check(sf.train);
  check(sf.test);
  return sf;
}

features::FeatureSet pick(const features::FeatureSet& all,
                          const std::vector<std::pair<std::size_t, std::string>>& part) {
  features::FeatureSet out;
  out.reserve(part.size());
  for (const auto& entry : part) out.push_back(all[entry.first]);
  return out;
}

eval::ImposterPolicy policy(const PipelineConfig& config) {
  const auto& e = config.evaluate;
  return e.sampled_imposters ? eval::ImposterPolicy::sampled(e.imposter_k, e.imposter_seed) : eval::ImposterPolicy::all();
}

}  // namespace

Paths paths(const PipelineConfig& config) { return {fs::path(config.output_dir)}; }

dataset::Manifest source_manifest(const PipelineConfig& config) {
  if (!config.dataset_manifest.empty()) return dataset::load_manifest(config.dataset_manifest);
  if (!config.dataset_root.empty()) {
    return dataset::generate_manifest(config.dataset_root, dataset::parse_layout(config.dataset_layout));
  }
  const fs::path synth = paths(config).synth_dir() / "manifest.csv";
  require(synth, "manifest (set dataset.manifest or dataset.root, or run synth)");
  return dataset::load_manifest(synth);
}

fs::path enhanced_path(const PipelineConfig& config, const dataset::Manifest& manifest,
                       const dataset::SampleRecord& record) {
  fs::path rel(record.image_path);
  if (rel.is_absolute()) {
    fs::path inside = rel.lexically_relative(manifest.base_dir);
    rel = (inside.empty() || *inside.begin() == "..") ? rel.relative_path() : inside;
  }
  fs::path safe;
  for (const auto& part : rel.lexically_normal()) safe /= (part == ".." ? fs::path("_up") : part);
  rel = safe;
  rel.replace_extension(".pgm");
  return paths(config).enhanced_dir() / rel;
}

dataset::Manifest cmd_synth(const PipelineConfig& config) {
  const auto& s = config.synth;
  return synth::write_dataset(paths(config).synth_dir(), {s.classes, s.samples, s.seed, s.width, s.height});
}

EnhanceSummary cmd_enhance(const PipelineConfig& config) {
  const auto manifest = source_manifest(config);
  const Paths p = paths(config);
  EnhanceSummary summary;
  summary.validation = dataset::validate_manifest(manifest);
  write_text(p.validation(), summary.validation.to_json_lines());

  for (const auto& r : manifest.records) fs::create_directories(enhanced_path(config, manifest, r).parent_path());
  parallel_for(manifest.records.size(), [&](std::size_t i) {
    const auto& r = manifest.records[i];
    const auto img = imaging::load_grayscale(manifest.resolve(r));
    imaging::write_pgm(enhanced_path(config, manifest, r), imaging::enhance(img, config.enhance));
  });

  dataset::Manifest mirrored = manifest;
  mirrored.base_dir = p.enhanced_dir();
  for (auto& r : mirrored.records) {
    r.image_path = enhanced_path(config, manifest, r).lexically_relative(p.enhanced_dir()).generic_string();
  }
  dataset::write_manifest(p.enhanced_dir() / "manifest.csv", mirrored);
  summary.images = manifest.records.size();
  return summary;
}

features::FeatureFile cmd_extract(const PipelineConfig& config) {
  const auto manifest = source_manifest(config);
  const Paths p = paths(config);
  const std::string& method = config.extract.method;

  if (is_file_method(method)) {
    auto file = features::read_feature_file(method.substr(5));
    if (file.records.size() != manifest.records.size()) {
      fail(ErrorCode::DimensionMismatch, "external feature file has " + std::to_string(file.records.size()) +
                                             " records, manifest has " + std::to_string(manifest.records.size()));
    }
    for (std::size_t i = 0; i < file.records.size(); ++i) {
      if (file.records[i].label != manifest.records[i].class_id()) {
        fail(ErrorCode::DimensionMismatch, "external feature record " + std::to_string(i) + " label '" +
                                               file.records[i].label + "' does not match '" +
                                               manifest.records[i].class_id() + "'");
      }
    }
    features::write_feature_file(p.features(), file);
    return file;
  }

  const Method m = parse_method(method);
  for (const auto& r : manifest.records) {
    const auto path = enhanced_path(config, manifest, r);
    if (!fs::exists(path)) fail(ErrorCode::FileNotFound, "missing enhanced image for " + r.key() + ": " + path.string());
  }
  features::FeatureSet set(manifest.records.size());
  parallel_for(manifest.records.size(), [&](std::size_t i) {
    const auto& r = manifest.records[i];
    set[i] = extract_base(config, m.base, imaging::load_grayscale(enhanced_path(config, manifest, r)));
    set[i].label = r.class_id();
    set[i].source_tag = r.key();
  });

  if (m.pca) {
    // Fit on the training half only so evaluation never sees test statistics.
    const auto idx = dataset::split_indices(manifest, config.split);
    features::FeatureSet train;
    for (auto i : idx.train) train.push_back(set[i]);
    const auto model = features::pca_fit(train, config.extract.pca_k);
    features::save_pca(p.pca(), model);
    for (auto& v : set) v = features::pca_transform(model, v);
  }
  auto file = features::make_feature_file(std::move(set), method);
  features::write_feature_file(p.features(), file);
  return file;
}

TrainSummary cmd_train(const PipelineConfig& config) {
  const auto manifest = source_manifest(config);
  const auto all = load_feature_set(config, manifest);
  const auto idx = dataset::split_indices(manifest, config.split);
  const auto sf = dataset::SplitFile::from(manifest, config.split, idx);
  const auto train = pick(all, sf.train);
  const auto forest = forest::train_forest(train, config.forest);
  const Paths p = paths(config);
  dataset::save_split_file(p.split(), sf);
  forest::save_forest(p.model(), forest);
  return {sf.train.size(), sf.test.size(), forest.class_labels().size()};
}

eval::EvalReport cmd_evaluate(const PipelineConfig& config) {
  const Paths p = paths(config);
  require(p.model(), "model (run train first)");
  const auto forest = forest::load_forest(p.model());
  const auto manifest = source_manifest(config);
  const auto all = load_feature_set(config, manifest);
  const auto sf = load_checked_split(config, manifest);
  const auto test = pick(all, sf.test);
  const auto scored = eval::build_trials(forest, test, policy(config));
  const auto rep = eval::evaluate(scored, config.evaluate.target_fmr);

  const std::string title = (manifest.dataset_name.empty() ? std::string("dataset") : manifest.dataset_name);
  write_text(p.report(), report::report_to_json(rep));
  write_text(p.roc_csv(), report::roc_csv(rep.roc));
  write_text(p.roc_svg(), report::roc_svg(rep.roc, rep.auc, title + " / " + config.extract.method));
  write_text(p.summary(), report::summary_text(title, config.extract.method, rep));
  return rep;
}

std::string VerifyResult::line() const {
  char buf[96];
  std::string out = accept ? "ACCEPT" : "REJECT";
  std::snprintf(buf, sizeof buf, " score=%.6g threshold=%.6g", score, threshold);
  out += buf;
  out += " predicted=" + predicted;
  std::snprintf(buf, sizeof buf, " confidence=%.6g", confidence);
  out += buf;
  return out;
}

VerifyResult cmd_verify(const PipelineConfig& config, const fs::path& probe, const std::string& claim) {
  const Paths p = paths(config);
  require(p.model(), "model (run train first)");
  const auto forest = forest::load_forest(p.model());
  if (!forest.class_index(claim)) fail(ErrorCode::UnknownLabel, "claimed label '" + claim + "' is not enrolled");

  double threshold = 0.0;
  if (config.verify_threshold) {
    threshold = *config.verify_threshold;
  } else {
    threshold = report::report_from_json(read_text(p.report(), "report (run evaluate or set verify.threshold)"))
                    .operating_threshold;
  }

  if (is_file_method(config.extract.method)) {
    fail(ErrorCode::InvalidParam, "verify needs an image extractor; extract.method is an external feature file");
  }
  const Method m = parse_method(config.extract.method);
  const auto enhanced = imaging::enhance(imaging::load_grayscale(probe), config.enhance);
  auto v = extract_base(config, m.base, enhanced);
  if (m.pca) {
    require(p.pca(), "PCA model (run extract first)");
    v = features::pca_transform(features::load_pca(p.pca()), v);
  }
  if (v.values.size() != forest.dimension()) {
    fail(ErrorCode::DimensionMismatch, "probe has " + std::to_string(v.values.size()) + " features, model expects " +
                                           std::to_string(forest.dimension()));
  }
  const auto prediction = forest.predict(v);
  const auto idx = *forest.class_index(claim);
  VerifyResult result;
  result.score = static_cast<double>(prediction.votes[idx]) / static_cast<double>(forest.trees().size());
  result.threshold = threshold;
  result.accept = result.score >= threshold;
  result.predicted = prediction.label;
  result.confidence = prediction.confidence;
  return result;
}

}  // namespace veinforge::pipeline

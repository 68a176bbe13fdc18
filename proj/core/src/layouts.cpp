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

#include <algorithm>
#include <cctype>
#include <regex>
#include <set>

namespace veinforge::dataset {

namespace fs = std::filesystem;

Layout parse_layout(std::string_view name) {
  if (name == "fv-usm") return Layout::FvUsm;
  if (name == "utfvp") return Layout::Utfvp;
  if (name == "plusvein-fv3") return Layout::PlusveinFv3;
  if (name == "flat") return Layout::Flat;
  fail(ErrorCode::InvalidParam, "unknown dataset layout '" + std::string(name) + "'");
}

std::string_view to_string(Layout layout) noexcept {
  switch (layout) {
    case Layout::FvUsm: return "fv-usm";
    case Layout::Utfvp: return "utfvp";
    case Layout::PlusveinFv3: return "plusvein-fv3";
    case Layout::Flat: return "flat";
  }
  return "flat";
}

namespace {

bool is_image_file(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  static const char* kExtensions[] = {".pgm", ".pnm", ".png", ".bmp", ".jpg", ".jpeg", ".tif", ".tiff"};
  return std::any_of(std::begin(kExtensions), std::end(kExtensions), [&](const char* e) { return ext == e; });
}

std::vector<fs::path> sorted_entries(const fs::path& dir, bool directories) {
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (directories ? entry.is_directory() : (entry.is_regular_file() && is_image_file(entry.path()))) {
      out.push_back(entry.path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<fs::path> sorted_images_recursive(const fs::path& root) {
  std::vector<fs::path> out;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (entry.is_regular_file() && is_image_file(entry.path())) out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string rel_path(const fs::path& p, const fs::path& root) { return p.lexically_relative(root).generic_string(); }

// Per-directory class folders: flat and fv-usm.
void walk_class_dirs(Manifest& m, const fs::path& root, const std::regex* pattern) {
  for (const auto& dir : sorted_entries(root, true)) {
    const std::string name = dir.filename().string();
    std::string subject = name;
    std::string finger = "0";
    if (pattern) {
      std::smatch match;
      if (!std::regex_match(name, match, *pattern)) continue;
      subject = match[1];
      finger = match[2];
    }
    int index = 0;
    for (const auto& file : sorted_entries(dir, false)) {
      m.records.push_back({rel_path(file, root), subject, finger, 1, ++index});
    }
  }
}

}  // namespace

Manifest generate_manifest(const fs::path& root, Layout layout) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) fail(ErrorCode::LayoutMismatch, "dataset root is not a directory: " + root.string());

  Manifest m;
  m.dataset_name = std::string(to_string(layout));
  m.base_dir = root;

  switch (layout) {
    case Layout::Flat:
      walk_class_dirs(m, root, nullptr);
      break;
    case Layout::FvUsm: {
      static const std::regex kDir(R"(^(.+)_([0-9]+)$)");
      walk_class_dirs(m, root, &kDir);
      break;
    }
    case Layout::Utfvp: {
      static const std::regex kFile(R"(^([0-9]+)_([0-9]+)_([0-9]+)(_.*)?\.[A-Za-z]+$)");
      for (const auto& file : sorted_images_recursive(root)) {
        std::smatch match;
        const std::string name = file.filename().string();
        if (!std::regex_match(name, match, kFile)) continue;
        m.records.push_back({rel_path(file, root), match[1], match[2], 1, std::stoi(match[3])});
      }
      break;
    }
    case Layout::PlusveinFv3: {
      static const std::regex kFile(R"(^([0-9]+)_([0-9]+)_([0-9]+)_([0-9]+)\.[A-Za-z]+$)");
      for (const auto& file : sorted_images_recursive(root)) {
        std::smatch match;
        const std::string name = file.filename().string();
        if (!std::regex_match(name, match, kFile)) continue;
        m.records.push_back({rel_path(file, root), match[1], match[2], std::stoi(match[3]), std::stoi(match[4])});
      }
      break;
    }
  }
  if (m.records.empty()) {
    fail(ErrorCode::LayoutMismatch, "no images matching the " + std::string(to_string(layout)) + " layout under " + root.string());
  }
  std::set<std::string> keys;
  for (const auto& r : m.records) {
    if (!keys.insert(r.key()).second) fail(ErrorCode::DuplicateRecord, "duplicate record " + r.key() + " at " + r.image_path);
  }
  return m;
}

}  // namespace veinforge::dataset

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

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

namespace veinforge::dataset {

namespace {

constexpr const char* kColumns[] = {"image_path", "subject_id", "finger_id", "session", "sample_index"};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

template <typename T>
T parse_number(std::string_view text, std::size_t line_no, const char* what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad " + what + " '" + std::string(text) + "'");
  }
  return value;
}

void apply_directive(Manifest& m, std::string_view body, std::size_t line_no) {
  const auto eq = body.find('=');
  if (eq == std::string_view::npos) return;  // plain comment
  const auto key = trim(body.substr(0, eq));
  const auto value = trim(body.substr(eq + 1));
  if (key == "dataset") {
    m.dataset_name = std::string(value);
    return;
  }
  if (!key.starts_with("expected.")) return;
  const auto field = key.substr(9);
  const auto n = parse_number<std::size_t>(value, line_no, "expected total");
  if (field == "subjects") m.expected.subjects = n;
  else if (field == "fingers") m.expected.fingers = n;
  else if (field == "images_per_finger") m.expected.images_per_finger = n;
  else if (field == "total") m.expected.total = n;
  else if (field == "width") m.expected.width = n;
  else if (field == "height") m.expected.height = n;
  else fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": unknown directive " + std::string(key));
}

}  // namespace

std::string SampleRecord::key() const {
  return subject_id + "|" + finger_id + "|" + std::to_string(session) + "|" + std::to_string(sample_index);
}

std::filesystem::path Manifest::resolve(const SampleRecord& record) const {
  const std::filesystem::path p(record.image_path);
  return p.is_absolute() || base_dir.empty() ? p : base_dir / p;
}

std::vector<std::string> Manifest::classes() const {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (const auto& r : records) {
    auto id = r.class_id();
    if (seen.insert(id).second) out.push_back(std::move(id));
  }
  return out;
}

Manifest parse_manifest(std::string_view text, std::filesystem::path base_dir) {
  Manifest m;
  m.base_dir = std::move(base_dir);
  std::array<std::size_t, 5> column_of{};
  bool have_header = false;
  std::size_t column_count = 0;
  std::set<std::string> keys;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
    line = trim(line);
    if (line.empty()) continue;

    if (!have_header) {
      if (line.front() == '#') {
        apply_directive(m, line.substr(1), line_no);
        continue;
      }
      const auto names = split_csv(line);
      column_count = names.size();
      for (std::size_t c = 0; c < 5; ++c) {
        std::size_t found = names.size();
        for (std::size_t i = 0; i < names.size(); ++i) {
          if (names[i] == kColumns[c]) found = i;
        }
        if (found == names.size()) fail(ErrorCode::ParseError, std::string("manifest header missing column '") + kColumns[c] + "'");
        column_of[c] = found;
      }
      have_header = true;
      continue;
    }

    const auto fields = split_csv(line);
    if (fields.size() != column_count) {
      fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected " + std::to_string(column_count) +
                                      " fields, got " + std::to_string(fields.size()));
    }
    SampleRecord r;
    r.image_path = std::string(fields[column_of[0]]);
    r.subject_id = std::string(fields[column_of[1]]);
    r.finger_id = std::string(fields[column_of[2]]);
    r.session = parse_number<int>(fields[column_of[3]], line_no, "session");
    r.sample_index = parse_number<int>(fields[column_of[4]], line_no, "sample_index");
    if (r.image_path.empty() || r.subject_id.empty() || r.finger_id.empty()) {
      fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": empty required field");
    }
    if (!keys.insert(r.key()).second) {
      fail(ErrorCode::DuplicateRecord, "line " + std::to_string(line_no) + ": duplicate record " + r.key());
    }
    m.records.push_back(std::move(r));
  }
  if (!have_header) fail(ErrorCode::ParseError, "manifest has no header line");
  return m;
}

Manifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::FileNotFound, "cannot open manifest " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_manifest(buffer.str(), path.parent_path());
}

std::string format_manifest(const Manifest& m) {
  std::ostringstream out;
  if (!m.dataset_name.empty()) out << "#dataset=" << m.dataset_name << '\n';
  const auto directive = [&](const char* name, const std::optional<std::size_t>& v) {
    if (v) out << "#expected." << name << '=' << *v << '\n';
  };
  directive("subjects", m.expected.subjects);
  directive("fingers", m.expected.fingers);
  directive("images_per_finger", m.expected.images_per_finger);
  directive("total", m.expected.total);
  directive("width", m.expected.width);
  directive("height", m.expected.height);
  out << "image_path,subject_id,finger_id,session,sample_index\n";
  for (const auto& r : m.records) {
    for (const std::string* field : {&r.image_path, &r.subject_id, &r.finger_id}) {
      if (field->find_first_of(",\n\r") != std::string::npos) {
        fail(ErrorCode::InvalidParam, "manifest field contains a separator: " + *field);
      }
    }
    out << r.image_path << ',' << r.subject_id << ',' << r.finger_id << ',' << r.session << ',' << r.sample_index << '\n';
  }
  return out.str();
}

void write_manifest(const std::filesystem::path& path, const Manifest& m) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::IoError, "cannot write manifest " + path.string());
  out << format_manifest(m);
}

Manifest subset(const Manifest& m, const std::vector<std::size_t>& indices) {
  Manifest out;
  out.dataset_name = m.dataset_name;
  out.base_dir = m.base_dir;
  out.records.reserve(indices.size());
  for (std::size_t i : indices) out.records.push_back(m.records.at(i));
  return out;
}

}  // namespace veinforge::dataset

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
#include "veinforge/pgm.hpp"

#include <json.hpp>

#include <map>
#include <set>

namespace veinforge::dataset {

namespace {

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "skipped";
}

void compare(ValidationReport& report, const char* name, std::size_t actual, std::size_t expected) {
  const bool ok = actual == expected;
  report.checks.push_back({name, ok ? CheckStatus::Pass : CheckStatus::Fail,
                            "found " + std::to_string(actual) + ", declared " + std::to_string(expected)});
}

std::string join_limited(const std::vector<std::string>& items, std::size_t limit = 10) {
  std::string out;
  for (std::size_t i = 0; i < items.size() && i < limit; ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  if (items.size() > limit) out += ", ... (" + std::to_string(items.size()) + " total)";
  return out;
}

}  // namespace

bool ValidationReport::passed() const noexcept {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Fail) return false;
  }
  return true;
}

const ValidationCheck* ValidationReport::find(std::string_view name) const noexcept {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string ValidationReport::to_json_lines() const {
  std::string out;
  for (const auto& c : checks) {
    nlohmann::ordered_json line;
    line["name"] = c.name;
    line["status"] = status_name(c.status);
    line["detail"] = c.detail;
    out += line.dump();
    out += '\n';
  }
  return out;
}

ValidationReport validate_manifest(const Manifest& m, std::size_t dimension_samples) {
  ValidationReport report;
  const ExpectedTotals& e = m.expected;
  if (!e.any()) {
    report.checks.push_back({"expected", CheckStatus::Skipped, "no expected totals declared"});
    return report;
  }

  std::map<std::string, std::size_t> per_class;
  std::map<std::string, std::set<std::string>> fingers_of;
  for (const auto& r : m.records) {
    ++per_class[r.class_id()];
    fingers_of[r.subject_id].insert(r.finger_id);
  }

  if (e.total) compare(report, "total_records", m.records.size(), *e.total);

  // When the declared per-finger count disagrees with the declared total, the
  // total wins and the per-class check uses the count derived from it.
  bool per_finger_overruled = false;
  if (e.subjects && e.fingers && e.images_per_finger && e.total) {
    const std::size_t product = *e.subjects * *e.fingers * *e.images_per_finger;
    per_finger_overruled = product != *e.total;
    report.checks.push_back({"declared_arithmetic", per_finger_overruled ? CheckStatus::Skipped : CheckStatus::Pass,
                              std::to_string(*e.subjects) + "x" + std::to_string(*e.fingers) + "x" +
                                  std::to_string(*e.images_per_finger) + "=" + std::to_string(product) +
                                  " vs declared total " + std::to_string(*e.total) +
                                  (per_finger_overruled ? "; trusting the total" : "")});
  }

  if (e.subjects) compare(report, "subjects", fingers_of.size(), *e.subjects);

  if (e.fingers) {
    std::vector<std::string> bad;
    for (const auto& [subject, fingers] : fingers_of) {
      if (fingers.size() != *e.fingers) bad.push_back(subject + " (" + std::to_string(fingers.size()) + ")");
    }
    report.checks.push_back({"fingers_per_subject", bad.empty() ? CheckStatus::Pass : CheckStatus::Fail,
                              bad.empty() ? "every subject has " + std::to_string(*e.fingers) + " fingers"
                                          : "subjects off: " + join_limited(bad)});
  }

  std::optional<std::size_t> per_finger = per_finger_overruled ? std::nullopt : e.images_per_finger;
  std::string origin = "declared";
  if (!per_finger && e.total && e.subjects && e.fingers && *e.subjects * *e.fingers > 0 &&
      *e.total % (*e.subjects * *e.fingers) == 0) {
    per_finger = *e.total / (*e.subjects * *e.fingers);
    origin = "derived from total";
  }
  if (per_finger) {
    std::vector<std::string> bad;
    for (const auto& [cls, count] : per_class) {
      if (count != *per_finger) bad.push_back(cls + " (" + std::to_string(count) + ")");
    }
    report.checks.push_back({"images_per_class", bad.empty() ? CheckStatus::Pass : CheckStatus::Fail,
                              bad.empty() ? "every class has " + std::to_string(*per_finger) + " images (" + origin + ")"
                                          : "expected " + std::to_string(*per_finger) + " (" + origin +
                                                "), classes off: " + join_limited(bad)});
  }

  if (e.width || e.height) {
    std::vector<std::string> bad;
    const std::size_t n = m.records.size();
    const std::size_t samples = std::min(dimension_samples, n);
    for (std::size_t s = 0; s < samples; ++s) {
      const auto& r = m.records[s * n / samples];
      try {
        const auto img = imaging::load_grayscale(m.resolve(r));
        if ((e.width && img.width() != *e.width) || (e.height && img.height() != *e.height)) {
          bad.push_back(r.image_path + " is " + std::to_string(img.width()) + "x" + std::to_string(img.height()));
        }
      } catch (const Error& err) {
        bad.push_back(r.image_path + ": " + err.what());
      }
    }
    report.checks.push_back({"dimensions", bad.empty() && samples > 0 ? CheckStatus::Pass : CheckStatus::Fail,
                              samples == 0 ? "no records to sample"
                              : bad.empty() ? std::to_string(samples) + " sampled images match"
                                            : join_limited(bad)});
  }
  return report;
}

}  // namespace veinforge::dataset

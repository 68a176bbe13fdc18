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

#include "veinforge/report.hpp"
#include "veinforge/error.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace veinforge::report {

using nlohmann::ordered_json;

namespace {

ordered_json optional_number(const std::optional<double>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

std::string number(double v) {
  // Shortest text that parses back to the same double.
  char buf[32];
  const auto end = std::to_chars(buf, buf + sizeof buf, v).ptr;
  return std::string(buf, end);
}

}  // namespace

std::string report_to_json(const eval::EvalReport& r) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["n_genuine"] = r.n_genuine;
  j["n_imposter"] = r.n_imposter;
  j["auc"] = r.auc;
  j["macro_auc"] = optional_number(r.macro_auc);
  j["eer"] = r.eer;
  j["eer_threshold"] = r.eer_threshold;
  j["target_fmr"] = r.target_fmr;
  j["operating_threshold"] = r.operating_threshold;
  j["fmr_at_operating"] = r.fmr_at_operating;
  j["fnmr_at_operating"] = r.fnmr_at_operating;
  j["mean_confidence"] = r.mean_confidence;
  j["identification_accuracy"] = r.identification_accuracy;
  ordered_json per_class = ordered_json::array();
  for (const auto& [label, auc] : r.per_class_auc) per_class.push_back({{"label", label}, {"auc", optional_number(auc)}});
  j["per_class_auc"] = std::move(per_class);
  ordered_json roc = ordered_json::array();
  for (const auto& p : r.roc) {
    roc.push_back({{"threshold", p.threshold}, {"fpr", p.fpr}, {"tpr", p.tpr}, {"fmr", p.fmr}, {"fnmr", p.fnmr}});
  }
  j["roc"] = std::move(roc);
  return j.dump(2) + "\n";
}

std::vector<std::string> validate_report_json(const std::string& text) {
  std::vector<std::string> problems;
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    return {std::string("not valid JSON: ") + e.what()};
  }
  if (!j.is_object()) return {"report must be a JSON object"};
  if (!j.contains("schema") || j["schema"] != kReportSchema) problems.push_back("schema must be \"veinforge.report/1\"");

  const auto unit = [&](const char* key, bool nullable = false) {
    if (!j.contains(key)) {
      problems.push_back(std::string("missing field ") + key);
      return;
    }
    const auto& v = j[key];
    if (nullable && v.is_null()) return;
    if (!v.is_number()) {
      problems.push_back(std::string(key) + " must be a number");
    } else if (v.get<double>() < 0.0 || v.get<double>() > 1.0) {
      problems.push_back(std::string(key) + " outside [0, 1]");
    }
  };
  for (const char* key : {"auc", "eer", "eer_threshold", "target_fmr", "operating_threshold", "fmr_at_operating",
                          "fnmr_at_operating", "mean_confidence", "identification_accuracy"}) {
    unit(key);
  }
  unit("macro_auc", true);
  for (const char* key : {"n_genuine", "n_imposter"}) {
    if (!j.contains(key) || !j[key].is_number_unsigned() || j[key].get<std::uint64_t>() == 0) {
      problems.push_back(std::string(key) + " must be a positive integer");
    }
  }

  if (!j.contains("per_class_auc") || !j["per_class_auc"].is_array()) {
    problems.push_back("per_class_auc must be an array");
  } else {
    for (const auto& entry : j["per_class_auc"]) {
      if (!entry.is_object() || !entry.contains("label") || !entry["label"].is_string() || !entry.contains("auc") ||
          !(entry["auc"].is_null() || entry["auc"].is_number())) {
        problems.push_back("per_class_auc entries need a string label and a numeric or null auc");
        break;
      }
    }
  }

  if (!j.contains("roc") || !j["roc"].is_array() || j["roc"].size() < 2) {
    problems.push_back("roc must be an array of at least two points");
  } else {
    const auto& roc = j["roc"];
    for (std::size_t i = 0; i < roc.size(); ++i) {
      const auto& p = roc[i];
      bool ok = p.is_object();
      for (const char* key : {"threshold", "fpr", "tpr", "fmr", "fnmr"}) ok = ok && p.contains(key) && p[key].is_number();
      if (!ok) {
        problems.push_back("roc[" + std::to_string(i) + "] needs numeric threshold, fpr, tpr, fmr, fnmr");
        break;
      }
      const double fpr = p["fpr"], tpr = p["tpr"], fmr = p["fmr"], fnmr = p["fnmr"];
      if (fpr < 0 || fpr > 1 || tpr < 0 || tpr > 1) problems.push_back("roc[" + std::to_string(i) + "] rate outside [0, 1]");
      if (fmr != fpr) problems.push_back("roc[" + std::to_string(i) + "] fmr differs from fpr");
      if (std::abs(fnmr + tpr - 1.0) > 1e-12) problems.push_back("roc[" + std::to_string(i) + "] fnmr + tpr != 1");
      if (i > 0) {
        const auto& q = roc[i - 1];
        if (p["threshold"].get<double>() > q["threshold"].get<double>()) problems.push_back("roc thresholds not descending");
        if (fpr < q["fpr"].get<double>()) problems.push_back("roc fpr decreases at " + std::to_string(i));
      }
    }
    if (problems.empty()) {
      const auto& first = roc.front();
      const auto& last = roc.back();
      if (first["fpr"] != 0.0 || first["tpr"] != 0.0) problems.push_back("roc must start at (0, 0)");
      if (last["fpr"] != 1.0 || last["tpr"] != 1.0) problems.push_back("roc must end at (1, 1)");
    }
  }
  return problems;
}

eval::EvalReport report_from_json(const std::string& text) {
  if (const auto problems = validate_report_json(text); !problems.empty()) {
    fail(ErrorCode::FormatError, "invalid report: " + problems.front());
  }
  const auto j = ordered_json::parse(text);
  eval::EvalReport r;
  r.n_genuine = j["n_genuine"];
  r.n_imposter = j["n_imposter"];
  r.auc = j["auc"];
  if (!j["macro_auc"].is_null()) r.macro_auc = j["macro_auc"].get<double>();
  r.eer = j["eer"];
  r.eer_threshold = j["eer_threshold"];
  r.target_fmr = j["target_fmr"];
  r.operating_threshold = j["operating_threshold"];
  r.fmr_at_operating = j["fmr_at_operating"];
  r.fnmr_at_operating = j["fnmr_at_operating"];
  r.mean_confidence = j["mean_confidence"];
  r.identification_accuracy = j["identification_accuracy"];
  for (const auto& e : j["per_class_auc"]) {
    r.per_class_auc.emplace_back(e["label"].get<std::string>(),
                                 e["auc"].is_null() ? std::nullopt : std::optional<double>(e["auc"].get<double>()));
  }
  for (const auto& p : j["roc"]) r.roc.push_back({p["threshold"], p["tpr"], p["fpr"], p["fmr"], p["fnmr"]});
  return r;
}

std::string roc_csv(const std::vector<eval::RocPoint>& roc) {
  std::string out = "threshold,fpr,tpr,fmr,fnmr\n";
  for (const auto& p : roc) {
    out += number(p.threshold) + ',' + number(p.fpr) + ',' + number(p.tpr) + ',' + number(p.fmr) + ',' + number(p.fnmr) + '\n';
  }
  return out;
}

std::string roc_svg(const std::vector<eval::RocPoint>& roc, double auc, const std::string& title) {
  constexpr double kSize = 400.0;
  constexpr double kMargin = 50.0;
  const auto px = [&](double fpr) { return kMargin + fpr * (kSize - 2 * kMargin); };
  const auto py = [&](double tpr) { return kSize - kMargin - tpr * (kSize - 2 * kMargin); };
  const auto fmt = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return std::string(buf);
  };
  std::string escaped;
  for (char c : title) {
    switch (c) {
      case '&': escaped += "&amp;"; break;
      case '<': escaped += "&lt;"; break;
      case '>': escaped += "&gt;"; break;
      default: escaped += c;
    }
  }

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n"
      << "<rect width=\"400\" height=\"400\" fill=\"white\"/>\n"
      << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kSize - 2 * kMargin << "\" height=\""
      << kSize - 2 * kMargin << "\" fill=\"none\" stroke=\"black\"/>\n"
      << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(1) << "\" y2=\"" << py(1)
      << "\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n"
      << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < roc.size(); ++i) svg << (i ? " " : "") << fmt(px(roc[i].fpr)) << ',' << fmt(py(roc[i].tpr));
  svg << "\"/>\n"
      << "<text x=\"200\" y=\"30\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" << escaped
      << " (AUC " << fmt(auc) << ")</text>\n"
      << "<text x=\"200\" y=\"385\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">False positive rate</text>\n"
      << "<text x=\"15\" y=\"200\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
         "transform=\"rotate(-90 15 200)\">True positive rate</text>\n"
      << "</svg>\n";
  return svg.str();
}

std::string format_table(const std::vector<std::string>& headers, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(headers.size(), 0);
  for (std::size_t c = 0; c < headers.size(); ++c) width[c] = headers[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  const auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t c = 0; c < headers.size(); ++c) {
      const std::string cell = c < cells.size() ? cells[c] : "";
      out += cell;
      if (c + 1 < headers.size()) out += std::string(width[c] - cell.size() + 2, ' ');
    }
    return out + '\n';
  };
  std::string out = line(headers);
  for (const auto& row : rows) out += line(row);
  return out;
}

std::string fixed2(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  return buf;
}

std::string threshold_table(const std::vector<ThresholdRow>& rows) {
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) cells.push_back({r.dataset, fixed2(r.threshold), fixed2(r.fmr), fixed2(r.fnmr)});
  return format_table({"Dataset", "Threshold", "False Match Rate (FMR)", "False Non-Match Rate (FNMR)"}, cells);
}

std::string metric_table(const std::vector<std::string>& models, const std::vector<MetricRow>& rows) {
  std::vector<std::string> headers{"DATABASE"};
  headers.insert(headers.end(), models.begin(), models.end());
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) {
    std::vector<std::string> row{r.dataset};
    for (double v : r.values) row.push_back(fixed2(v));
    cells.push_back(std::move(row));
  }
  return format_table(headers, cells);
}

std::string summary_text(const std::string& dataset, const std::string& model, const eval::EvalReport& r) {
  std::string out;
  out += "Thresholds, FMR and FNMR (" + model + ")\n";
  out += threshold_table({{dataset, r.operating_threshold, r.fmr_at_operating, r.fnmr_at_operating}});
  out += "\nMean confidence\n";
  out += metric_table({model}, {{dataset, {r.mean_confidence}}});
  out += "\nEER\n";
  out += metric_table({model}, {{dataset, {r.eer}}});
  out += "\nAUC " + fixed2(r.auc) + "  (" + std::to_string(r.n_genuine) + " genuine, " + std::to_string(r.n_imposter) +
         " imposter trials)\n";
  return out;
}

}  // namespace veinforge::report

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

// veinforge: batch finger-vein verification pipeline.
//
//   veinforge <command> [--config <path>] [--key=value ...]
//
// Exit status: 0 success or ACCEPT, 2 REJECT, 1 any error.

#include "veinforge/config.hpp"
#include "veinforge/error.hpp"
#include "veinforge/pipeline.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace veinforge;

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kReject = 2;

// Remaining arguments must all be --key=value overrides of config keys.
void apply_overrides(PipelineConfig& config, const std::vector<std::string>& extras) {
  for (const auto& arg : extras) {
    const auto eq = arg.find('=');
    if (arg.rfind("--", 0) != 0 || eq == std::string::npos) {
      fail(ErrorCode::InvalidParam, "unexpected argument '" + arg + "' (overrides are --key=value)");
    }
    apply_config_value(config, arg.substr(2, eq - 2), arg.substr(eq + 1));
  }
}

void print_validation(const dataset::ValidationReport& report) {
  for (const auto& c : report.checks) {
    const char* status = c.status == dataset::CheckStatus::Pass ? "pass"
                         : c.status == dataset::CheckStatus::Fail ? "FAIL" : "skipped";
    std::cout << "  " << c.name << ": " << status;
    if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
    std::cout << '\n';
  }
}

int run_command(const std::string& command, const PipelineConfig& config, const std::string& probe,
                const std::string& claim) {
  if (command == "synth") {
    const auto m = pipeline::cmd_synth(config);
    std::cout << "wrote " << m.records.size() << " images to " << pipeline::paths(config).synth_dir().string() << '\n';
  } else if (command == "validate") {
    const auto report = dataset::validate_manifest(pipeline::source_manifest(config));
    print_validation(report);
    return report.passed() ? kOk : kError;
  } else if (command == "enhance") {
    const auto s = pipeline::cmd_enhance(config);
    std::cout << "enhanced " << s.images << " images\n";
    if (!s.validation.passed()) {
      std::cout << "dataset validation reported mismatches:\n";
      print_validation(s.validation);
    }
  } else if (command == "extract") {
    const auto f = pipeline::cmd_extract(config);
    std::cout << "extracted " << f.records.size() << " vectors of dimension " << f.dimension << '\n';
  } else if (command == "train") {
    const auto s = pipeline::cmd_train(config);
    std::cout << "trained on " << s.train_size << " samples (" << s.classes << " classes), " << s.test_size
              << " held out\n";
  } else if (command == "evaluate") {
    const auto r = pipeline::cmd_evaluate(config);
    std::cout << "wrote " << pipeline::paths(config).report().string() << ", roc.csv, roc.svg, summary.txt\n";
    std::printf("auc=%.6f eer=%.6f operating_threshold=%.4f\n", r.auc, r.eer, r.operating_threshold);
  } else if (command == "verify") {
    const auto v = pipeline::cmd_verify(config, probe, claim);
    std::cout << v.line() << '\n';
    return v.accept ? kOk : kReject;
  } else if (command == "config") {
    std::cout << format_config(config);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finger-vein verification: enhance, extract, train, evaluate, verify"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Show help for every command");

  std::string config_path;
  std::string probe;
  std::string claim;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"synth", "Generate the synthetic vein dataset under <output.dir>/synth"},
      {"validate", "Check the manifest against its declared totals"},
      {"enhance", "CLAHE-enhance every manifest image into <output.dir>/enhanced"},
      {"extract", "Write <output.dir>/features.fvf from enhanced images or an external file"},
      {"train", "Split the records and train the random forest"},
      {"evaluate", "Score the held-out half; write report.json, roc.csv, roc.svg, summary.txt"},
      {"verify", "Score one probe image against a claimed class"},
      {"config", "Print the effective configuration"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--config", config_path, "Configuration file (dotted key = value lines)");
    sub->allow_extras();
    sub->footer("Any config key can be overridden as --key=value, e.g. --forest.n_trees=50");
    if (name == "verify") {
      sub->add_option("--probe", probe, "Probe image")->required();
      sub->add_option("--claim", claim, "Claimed class id (subject:finger)")->required();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    PipelineConfig config = config_path.empty() ? PipelineConfig{} : load_config(config_path);
    apply_overrides(config, sub->remaining());
    return run_command(sub->get_name(), config, probe, claim);
  } catch (const Error& e) {
    std::cerr << "veinforge: error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "veinforge: error: " << e.what() << '\n';
  }
  return kError;
}

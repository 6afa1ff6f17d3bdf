// Command-line front end for the coarse/fine experiment harness.
//
//   efci_cli run <config.json> [--out DIR] [--csv] [--summary]
//                              [--sweep PARAM=V1,V2,...]
//
// Exit status: 0 all enabled bound checks passed, 1 a bound was violated,
// 2 configuration or runtime error.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "efci/harness.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitError = 2;

struct Options {
  std::string config;
  std::string out = ".";
  bool csv = false;
  bool summary = false;
  std::string sweep;
};

struct Outcome {
  int code = kExitError;
  std::string label;
  std::string text;  // summary or error message
};

Outcome run_one(const nlohmann::json& doc, const fs::path& out_dir,
                const Options& opt, std::string label) {
  Outcome outcome;
  outcome.label = std::move(label);
  try {
    const efci::ExperimentConfig cfg = efci::parse_config(doc);
    const efci::RunResult result = efci::run(cfg);
    if (opt.csv || opt.summary) fs::create_directories(out_dir);
    if (opt.csv) efci::emit_csv(result.report, out_dir / cfg.csv_name);
    if (opt.summary) {
      outcome.text = efci::summarize(result);
      std::ofstream(out_dir / cfg.summary_name) << outcome.text;
    }
    outcome.code = result.report.all_passed() ? kExitPass : kExitViolation;
  } catch (const std::exception& e) {
    outcome.text = std::string("error: ") + e.what() + '\n';
    outcome.code = kExitError;
  }
  return outcome;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

int run_command(const Options& opt) {
  nlohmann::json doc;
  try {
    doc = efci::read_json(opt.config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }

  std::vector<Outcome> outcomes;
  if (opt.sweep.empty()) {
    outcomes.push_back(run_one(doc, opt.out, opt, ""));
  } else {
    const auto eq = opt.sweep.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == opt.sweep.size()) {
      std::cerr << "error: --sweep expects PARAM=V1,V2,...\n";
      return kExitError;
    }
    const std::string param = opt.sweep.substr(0, eq);
    std::vector<std::future<Outcome>> jobs;
    for (const auto& value : split(opt.sweep.substr(eq + 1), ',')) {
      nlohmann::json member = doc;
      try {
        efci::set_dotted(member, param, value);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
      }
      const std::string label = param + "=" + value;
      jobs.push_back(std::async(std::launch::async, run_one, member,
                                fs::path(opt.out) / label, std::cref(opt), label));
    }
    for (auto& job : jobs) outcomes.push_back(job.get());
  }

  int code = kExitPass;
  for (const auto& o : outcomes) {
    if (!o.label.empty()) std::cout << "== " << o.label << " ==\n";
    (o.code == kExitError ? std::cerr : std::cout) << o.text;
    code = std::max(code, o.code);
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coarse/fine interpolant error-bound harness"};
  app.require_subcommand(1);
  Options opt;
  auto* run = app.add_subcommand("run", "run one experiment (or a sweep)");
  run->add_option("config", opt.config, "experiment configuration (JSON)")
      ->required();
  run->add_option("--out", opt.out, "output directory");
  run->add_flag("--csv", opt.csv, "write the per-subnode CSV report");
  run->add_flag("--summary", opt.summary, "print and write the text summary");
  run->add_option("--sweep", opt.sweep,
                  "run one experiment per value: PARAM=V1,V2,... (dotted keys)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }
  return run_command(opt);
}

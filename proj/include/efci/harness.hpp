#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "efci/compare.hpp"
#include "efci/efc_solver.hpp"

namespace efci {

/// Initial condition u0 on [a, b].
struct InitialCondition {
  enum class Kind { kConstant, kAffine, kSine, kTable };

  Kind kind = Kind::kConstant;
  double c0 = 0.0;         // constant value, or affine intercept
  double c1 = 0.0;         // affine slope
  double amplitude = 0.0;  // amplitude * sin(freq * x) + offset
  double freq = 0.0;
  double offset = 0.0;
  std::vector<double> table;  // uniform samples over [a, b], linearly interpolated

  std::function<double(double)> function(double a, double b) const;
};

struct ExperimentConfig {
  double a = 0.0;
  double b = 1.0;
  std::string flux_name = "linear";
  std::map<std::string, double> flux_params;
  InitialCondition u0;
  double h = 0.1;
  double dt = 0.01;
  int N = 2;
  int r = 2;
  std::optional<Boundary> boundary;  // nullopt: taken from u0(a), u0(b)
  std::optional<double> eps;         // nullopt: tightest eps from fine u0
  std::string csv_name = "report.csv";
  std::string summary_name = "summary.txt";
  CheckSelection checks;
};

/// Parses and validates a configuration. Errors name the responsible field.
ExperimentConfig parse_config(const nlohmann::json& doc);
ExperimentConfig load_config(const std::filesystem::path& path);
nlohmann::json read_json(const std::filesystem::path& path);

/// Sets a dotted key ("u0.amplitude", "h") in doc to a value parsed from text
/// (number if it parses as one, string otherwise).
void set_dotted(nlohmann::json& doc, const std::string& key,
                const std::string& text);

struct CostCounters {
  std::int64_t coarse_updates = 0;  // N (P - 1)
  std::int64_t fine_updates = 0;    // N r (P r - 1)
  std::int64_t interp_ops = 0;      // pieces built + samples evaluated
  std::chrono::duration<double> wall_coarse{};
  std::chrono::duration<double> wall_fine{};
};

struct RunResult {
  ExperimentConfig config;
  BoundReport report;
  CostCounters costs;
  CflReport cfl_coarse;
  CflReport cfl_fine;
};

/// Coarse solve, fine solve, interpolant, epsilon context and comparison.
RunResult run(const ExperimentConfig& config);

/// Header plus one row per record; 17 significant digits.
void write_csv(const BoundReport& report, std::ostream& os);
void emit_csv(const BoundReport& report, const std::filesystem::path& path);

extern const char* const kCsvHeader;

std::string summarize(const RunResult& result);

}  // namespace efci

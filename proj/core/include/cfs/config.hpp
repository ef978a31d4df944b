#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cfs/validation.hpp"

namespace cfs {

/// Raised for malformed or out-of-range configuration. `key()` is the dotted path of the
/// offending field ("architecture.r_c_mm"), or empty for document-level problems.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(message), key_(std::move(key)) {}

  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

struct ScenarioBlock {
  Vec3 rodrigues = Vec3::Zero();
  double r3 = 0.0;
  double delta = 0.1;
  double delta_r = 0.0;
  std::size_t n_s = 0;
  PairFilter pairs = PairFilter::all();
  std::optional<double> r_inner;
  std::optional<double> r_outer;
};

struct EstimateBlock {
  std::size_t n_directions = 2500;
  double r_max = 0.0;
  double tol = 0.01;
  // Fall back to the scenario block when absent.
  std::optional<Vec3> rodrigues;
  std::optional<PairFilter> pairs;
};

struct OutputBlock {
  std::string directory = ".";
  std::string summary_json = "summary.json";
  std::string samples_csv = "samples.csv";
  std::string unsafe_csv = "unsafe.csv";
  std::string estimate_json = "estimate.json";
  bool write_json = true;
  bool write_csv = true;
};

struct RunConfigFile {
  ArchitectureParams arch;  // angles already in radians
  std::optional<ScenarioBlock> scenario;
  std::optional<EstimateBlock> estimate;
  OutputBlock output;

  /// Throws ConfigError("scenario") if the scenario block is missing.
  ValidationConfig validation_config() const;
  /// Orientation and pair filter of the estimate run, resolved against the scenario block.
  Vec3 estimate_orientation() const;
  EstimateParams estimate_params() const;
};

/// Parses a UTF-8 JSON document. Lengths carry an `_mm` suffix, angles a `_deg` suffix.
///
///   {
///     "architecture": {"r_f_mm": 150, "r_m_mm": 75, "gamma_f_deg": 30.5,
///                      "gamma_m_deg": 40.5, "r_c_mm": 8.5, "z0_mm": 300},
///     "scenario": {"rodrigues": [c1, c2, c3], "r3_mm": 13.5, "delta": 0.1,
///                  "delta_r_mm": 1, "n_s": 2500, "pairs": "all" | [[1, 2], ...],
///                  "r_inner_mm": 12.2, "r_outer_mm": 14.9},
///     "estimate": {"n_directions": 2500, "r_max_mm": 50, "tol_mm": 0.01},
///     "output": {"directory": "out", "summary_json": "summary.json",
///                "samples_csv": "samples.csv", "unsafe_csv": "unsafe.csv",
///                "estimate_json": "estimate.json", "formats": ["json", "csv"]}
///   }
///
/// Only "architecture" is required; unknown keys are rejected. An empty document is treated
/// as {}.
RunConfigFile parse_config(std::string_view text);

RunConfigFile load_config(const std::string& path);

}  // namespace cfs

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "myers/radial_manifold.hpp"

namespace myers::cli {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Flat key = value scenario configuration. '#' starts a comment, blank lines
/// are ignored, duplicate keys are errors. Every key must be consumed by the
/// workflow that runs; leftovers are rejected by name and line (misspelled
/// parameters must never default silently).
class Config {
 public:
  static Config from_file(const std::string& path);
  static Config from_string(const std::string& text,
                            const std::string& origin = "<config>");

  bool has(const std::string& key) const;
  std::string require_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  double require_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  int require_int(const std::string& key) const;
  int get_int(const std::string& key, int fallback) const;
  std::vector<double> require_double_list(const std::string& key) const;

  void override_value(const std::string& key, const std::string& value);
  std::vector<std::string> keys_with_prefix(const std::string& prefix) const;
  /// Copy without sweep_* and workflow keys, usage flags reset.
  Config point_config() const;
  void reject_unknown_keys() const;

 private:
  struct Entry {
    std::string value;
    int line = 0;
    mutable bool used = false;
  };
  std::map<std::string, Entry> entries_;
  std::string origin_;
};

struct RunOptions {
  std::optional<double> step;  // --step override for grid-based workflows
  bool quiet = false;
};

/// Exit codes follow the workflow contract: 0 holds/consistent, 1 usage or
/// input error, 2 conclusion violated, 3 hypothesis violated, 4 falsification
/// alarm.
struct RunResult {
  int exit_code = 0;
  std::string table;              // human-readable report
  std::vector<std::string> csv;   // header followed by data rows
};

RadialManifold build_manifold(const Config& cfg);
GrowthFunction build_growth(const Config& cfg);

RunResult run_compare(const Config& cfg, const RunOptions& opts);
RunResult run_constants(const Config& cfg, const RunOptions& opts);
RunResult run_criterion(const Config& cfg, const RunOptions& opts);
RunResult run_ambrose(const Config& cfg, const RunOptions& opts);
RunResult run_sweep(const Config& cfg, const RunOptions& opts);

/// Writes all lines then renames into place, so failed runs leave no file.
void write_csv_atomic(const std::string& path, const std::vector<std::string>& lines);

/// 17 significant digits, period decimal separator (round-trip exact).
std::string format_real(double v);

}  // namespace myers::cli

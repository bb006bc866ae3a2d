#pragma once

#include <string>

#include "cli/report.hpp"
#include "core/integer_set.hpp"

namespace sf {

struct CommandOutput {
  Json report;
  std::string csv;         // empty when the command has no tabular output
  bool violation = false;  // a checked property failed
};

// name: exact, dilation-bound, sift, kernel, dense-model, residue-tree, chain,
// certify-l1, energy-check. set may be null for kernel. Unknown names or
// option keys throw UsageError.
CommandOutput run_command(const std::string& name, const IntegerSet* set, const Json& options);

struct ExperimentConfig {
  std::uint64_t seed = 1;
  double q1 = 3;
  double q = 100;
  i64 trunc = 10000;
  int grid_oversample = 8;
  double tol = 1e-9;
  i64 time_limit_ms = 60000;
  std::string output_dir;     // empty: nothing written
  std::size_t instances = 0;  // 0: suite default
};

ExperimentConfig config_from_json(const Json& options);

struct ExperimentReport {
  Json json;
  std::string csv;
  bool violation = false;
  double wall_ms = 0;  // kept out of json so reports stay byte-identical
};

ExperimentReport run_suite(const std::string& name, const ExperimentConfig& cfg);

}  // namespace sf

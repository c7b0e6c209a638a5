#pragma once

#include <string>
#include <vector>

#include "mflab/lab/config.hpp"
#include "mflab/lab/fit.hpp"

namespace mflab::lab {

struct SuiteResult {
  std::string experiment;
  std::vector<std::string> columns;            ///< header of the main CSV
  std::vector<std::vector<std::string>> table; ///< formatted data rows
  ScalingReport report;
  bool has_fit = false;
  std::vector<std::string> files;              ///< paths written, main CSV first
};

/// Runs the configured experiment over the N list and writes
/// <out>/<experiment>.csv, <out>/<experiment>_fit.csv, the SVG plot (csv+svg),
/// any per-experiment detail CSVs and <out>/manifest.txt. Data CSVs depend
/// only on the config, never on the thread count.
///
/// Throws UsageError for an invalid config and Error when the output
/// directory cannot be written.
SuiteResult run_suite(const ExperimentConfig& config);

}  // namespace mflab::lab

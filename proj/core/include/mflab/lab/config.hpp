#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mflab/grid.hpp"

namespace mflab::lab {

enum class OutputFormat { csv, csv_svg };

struct ExperimentConfig {
  std::string experiment;
  double grid_period = 128.0;
  std::size_t grid_samples = std::size_t{1} << 15;
  std::vector<std::size_t> n_list{2, 4, 8, 16, 32, 64, 128};
  double q = 3.0;
  double r = 1.5;
  double t = 3.0;
  double tol = 1e-6;
  std::size_t trials = 64;
  std::uint64_t seed = 20240501;
  std::string family = "auto";
  std::string out = "mflab-out";
  OutputFormat format = OutputFormat::csv_svg;
  std::size_t threads = 1;

  TorusGrid grid() const { return TorusGrid(grid_period, grid_samples); }
};

/// Experiment ids accepted by run_suite.
const std::vector<std::string>& experiment_ids();
bool is_experiment(const std::string& id);

/// Sets one key (flag name without dashes, e.g. "grid-period"). Throws
/// UsageError for unknown keys or malformed values.
void apply_setting(ExperimentConfig& config, const std::string& key, const std::string& value);

/// Reads `key = value` lines; '#' starts a comment, blank lines are ignored.
void apply_config_file(ExperimentConfig& config, const std::string& path);

/// Checks ranges (trials >= 1, q > 2, valid grid, known experiment, ...).
void validate(const ExperimentConfig& config);

/// The config as `key=value` lines, in a fixed order.
std::string describe(const ExperimentConfig& config);

std::vector<std::size_t> parse_n_list(const std::string& text);

}  // namespace mflab::lab

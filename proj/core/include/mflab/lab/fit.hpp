#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mflab::lab {

struct ScalingRow {
  double N = 0.0;
  double estimate = 0.0;
  std::size_t trials = 0;
  std::string argmax;
};

enum class PreferredModel { power, log_power, undetermined };

const char* to_string(PreferredModel model);

/// Least-squares fits log(est) = a + alpha log N and log(est) = b + beta log log N.
struct FitResult {
  double alpha = 0.0;
  double intercept_power = 0.0;
  double r2_power = 0.0;
  double beta = 0.0;
  double intercept_log = 0.0;
  double r2_log = 0.0;
  PreferredModel preferred = PreferredModel::undetermined;
  bool degenerate = false;  ///< constant estimates: slopes zero, R^2 undefined (NaN)
  std::size_t rows = 0;
};

/// Needs at least four rows with N > 1 and positive estimates (DomainError otherwise).
FitResult fit_scaling(const std::vector<ScalingRow>& rows);

struct ScalingReport {
  std::vector<ScalingRow> rows;  ///< sorted by N
  FitResult fit;
};

}  // namespace mflab::lab

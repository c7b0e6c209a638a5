#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mflab/lab/families.hpp"
#include "mflab/operators.hpp"

namespace mflab::lab {

struct TrialOutcome {
  double value = 0.0;
  std::string descriptor;
};

struct Estimate {
  double value = 0.0;
  std::size_t trials = 0;
  std::string argmax;
  std::vector<double> per_trial;
};

/// Runs trial(t) for t < trials on `threads` workers and keeps the maximum;
/// ties go to the lowest trial index, so the result is order independent.
Estimate max_over_trials(std::size_t trials, std::size_t threads, const std::function<TrialOutcome(std::size_t)>& trial);

/// ||out||_2 / ||f||_2 (0 for f = 0).
double strong_ratio(const Signal& f, const Signal& out);

/// max over a logarithmic grid of `points` levels in [span * max|out|, max|out|]
/// of lambda h #{|out| >= lambda} / ||f||_1. The count at level lambda is the
/// left limit of the distribution function, which is where the supremum over
/// lambda of lambda |{|out| > lambda}| is approached.
double weak_ratio(const Signal& out, double f_norm1, std::size_t points = 64, double span = 1e-4);

enum class OperatorId { vq_dk, sharp_maximal, rough_T, rvar_M };

OperatorId parse_operator(const std::string& name);
const char* to_string(OperatorId id);

struct OperatorParams {
  TorusGrid grid;
  FrequencySet sigma;
  double q = 3.0;
  ScaleRange range;
  VariationMode mode = VariationMode::nonhomogeneous;
  DkVariant variant = DkVariant::separated;
  RoughMultiplierSpec spec;
  RvarPath path = RvarPath::direct;
  double r = 2.0;
  double tol = 1e-6;
  std::optional<StrongFamily> strong_family;  ///< cycle through all when unset
  std::optional<WeakFamily> weak_family;
};

using SignalOperator = std::function<Signal(const Signal&)>;

SignalOperator make_operator(OperatorId id, const OperatorParams& params);

/// max over trials of ||Op f||_2 / ||f||_2 on the strong input families.
Estimate estimate_strong_norm(OperatorId id, const OperatorParams& params, std::size_t trials, std::uint64_t seed,
                              std::size_t threads = 1);

/// max over trials of weak_ratio(Op f, ||f||_1) on deltas and Haar atoms.
Estimate estimate_weak11(OperatorId id, const OperatorParams& params, std::size_t trials, std::uint64_t seed,
                         std::size_t threads = 1);

}  // namespace mflab::lab

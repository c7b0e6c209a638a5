#include "mflab/lab/estimate.hpp"

#include <algorithm>
#include <cmath>

#include "mflab/errors.hpp"
#include "mflab/parallel.hpp"
#include "mflab/rng.hpp"

namespace mflab::lab {

Estimate max_over_trials(std::size_t trials, std::size_t threads, const std::function<TrialOutcome(std::size_t)>& trial) {
  std::vector<TrialOutcome> outcomes(trials);
  parallel_for(trials, threads, [&](std::size_t t) { outcomes[t] = trial(t); });
  Estimate est;
  est.trials = trials;
  est.per_trial.reserve(trials);
  bool first = true;
  for (const auto& o : outcomes) {
    est.per_trial.push_back(o.value);
    if (first || o.value > est.value) {
      est.value = o.value;
      est.argmax = o.descriptor;
      first = false;
    }
  }
  return est;
}

double strong_ratio(const Signal& f, const Signal& out) {
  const double denominator = f.norm2();
  return denominator > 0.0 ? out.norm2() / denominator : 0.0;
}

double weak_ratio(const Signal& out, double f_norm1, std::size_t points, double span) {
  if (!(f_norm1 > 0.0)) return 0.0;
  std::vector<double> mags(out.values.size());
  for (std::size_t m = 0; m < mags.size(); ++m) mags[m] = std::abs(out.values[m]);
  std::sort(mags.begin(), mags.end());
  const double top = mags.empty() ? 0.0 : mags.back();
  if (!(top > 0.0)) return 0.0;
  const double h = out.grid.step();
  double best = 0.0;
  for (std::size_t i = 0; i < points; ++i) {
    const double frac = points > 1 ? static_cast<double>(i) / static_cast<double>(points - 1) : 1.0;
    const double lambda = i + 1 == points ? top : top * std::pow(span, 1.0 - frac);
    const auto at_least = static_cast<double>(mags.end() - std::lower_bound(mags.begin(), mags.end(), lambda));
    best = std::max(best, lambda * h * at_least / f_norm1);
  }
  return best;
}

OperatorId parse_operator(const std::string& name) {
  if (name == "vq_dk") return OperatorId::vq_dk;
  if (name == "sharp_maximal") return OperatorId::sharp_maximal;
  if (name == "rough_T") return OperatorId::rough_T;
  if (name == "rvar_M") return OperatorId::rvar_M;
  throw UsageError("unknown operator '" + name + "'");
}

const char* to_string(OperatorId id) {
  switch (id) {
    case OperatorId::vq_dk:
      return "vq_dk";
    case OperatorId::sharp_maximal:
      return "sharp_maximal";
    case OperatorId::rough_T:
      return "rough_T";
    case OperatorId::rvar_M:
      return "rvar_M";
  }
  return "?";
}

SignalOperator make_operator(OperatorId id, const OperatorParams& p) {
  switch (id) {
    case OperatorId::vq_dk:
      return [p](const Signal& f) { return vq_dk(f, p.sigma, p.q, p.range, p.mode, p.variant); };
    case OperatorId::sharp_maximal:
      return [p](const Signal& f) { return sharp_maximal(f, p.sigma, p.range); };
    case OperatorId::rough_T:
      p.spec.validate();
      return [p](const Signal& f) { return rough_T(f, p.spec); };
    case OperatorId::rvar_M:
      p.spec.validate();
      return [p](const Signal& f) { return rvar_M(f, p.spec, p.path, p.r, p.tol); };
  }
  throw UsageError("unknown operator");
}

namespace {

bool uses_sigma(OperatorId id) { return id == OperatorId::vq_dk || id == OperatorId::sharp_maximal; }

}  // namespace

Estimate estimate_strong_norm(OperatorId id, const OperatorParams& params, std::size_t trials, std::uint64_t seed,
                              std::size_t threads) {
  if (trials == 0) throw PreconditionError("estimate_strong_norm: trials must be >= 1");
  if (uses_sigma(id) && (params.sigma.empty() || params.range.size() == 0)) {
    throw PreconditionError("estimate_strong_norm: operator needs a frequency set and a scale range");
  }
  const SignalOperator op = make_operator(id, params);
  return max_over_trials(trials, threads, [&](std::size_t t) {
    Rng rng(trial_seed(seed, 0, t));
    std::vector<IndexInterval> windows;
    std::vector<std::int64_t> centers;
    std::string scale;
    if (uses_sigma(id)) {
      const int k = static_cast<int>(std::uniform_int_distribution<int>(params.range.k_min, params.range.k_max)(rng));
      const double u = std::bernoulli_distribution(0.5)(rng) ? 1.0 : 0.5;
      windows = sigma_windows(params.sigma, k, u);
      centers = params.sigma.indices();
      scale = ";k=" + std::to_string(k) + ";u=" + (u == 1.0 ? "1" : "0.5");
    } else {
      for (const auto& piece : params.spec.pieces) {
        windows.push_back(piece.omega);
        centers.push_back((piece.omega.lo + piece.omega.hi) / 2);
      }
      if (centers.empty()) centers.push_back(0);
    }
    const StrongFamily family = params.strong_family.value_or(static_cast<StrongFamily>(t % 3));
    Input input = strong_input(family, params.grid, windows, centers, rng);
    return TrialOutcome{strong_ratio(input.f, op(input.f)), input.descriptor + scale};
  });
}

Estimate estimate_weak11(OperatorId id, const OperatorParams& params, std::size_t trials, std::uint64_t seed,
                         std::size_t threads) {
  if (trials == 0) throw PreconditionError("estimate_weak11: trials must be >= 1");
  const SignalOperator op = make_operator(id, params);
  return max_over_trials(trials, threads, [&](std::size_t t) {
    Rng rng(trial_seed(seed, 1, t));
    const WeakFamily family = params.weak_family.value_or(static_cast<WeakFamily>(t % 2));
    Input input = weak_input(family, params.grid, rng);
    return TrialOutcome{weak_ratio(op(input.f), input.f.norm1()), input.descriptor};
  });
}

}  // namespace mflab::lab

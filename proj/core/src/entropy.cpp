#include "mflab/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mflab/errors.hpp"
#include "mflab/min_ball.hpp"

namespace mflab {

std::vector<double> farthest_point_radii(const VectorSequence& points) {
  const std::size_t n = points.size();
  std::vector<double> radii;
  if (n < 2) return radii;
  std::vector<double> nearest(n);
  for (std::size_t i = 0; i < n; ++i) nearest[i] = points.distance(0, i);
  std::vector<bool> chosen(n, false);
  chosen[0] = true;
  for (std::size_t step = 1; step < n; ++step) {
    std::size_t pick = n;
    double best = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!chosen[i] && nearest[i] > best) {
        best = nearest[i];
        pick = i;
      }
    }
    if (best <= 0.0) break;  // duplicates of chosen points add nothing
    radii.push_back(best);
    chosen[pick] = true;
    for (std::size_t i = 0; i < n; ++i) nearest[i] = std::min(nearest[i], points.distance(pick, i));
  }
  return radii;
}

namespace {

std::size_t greedy_from_radii(const std::vector<double>& radii, double lambda) {
  std::size_t count = 1;
  for (double r : radii) {
    if (r > lambda) ++count;
    else break;
  }
  return count;
}

std::size_t exact_cover(const VectorSequence& points, double lambda) {
  const std::size_t n = points.size();
  if (n > 12) throw SizeError("exact entropy is limited to 12 points");
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<char> feasible(full + 1, 0);
  std::vector<std::size_t> members;
  for (std::size_t mask = 1; mask <= full; ++mask) {
    members.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) members.push_back(i);
    }
    if (members.size() == 1) {
      feasible[mask] = 1;
      continue;
    }
    // feasibility is inherited by subsets, so any infeasible child rules it out
    bool children_ok = true;
    for (std::size_t i : members) {
      if (!feasible[mask & ~(std::size_t{1} << i)]) {
        children_ok = false;
        break;
      }
    }
    if (!children_ok) continue;
    const double radius = min_enclosing_ball(points, members).radius;
    feasible[mask] = radius <= lambda * (1.0 + 1e-9) ? 1 : 0;
  }

  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> best(full + 1, kUnset);
  best[0] = 0;
  for (std::size_t mask = 1; mask <= full; ++mask) {
    const std::size_t low = mask & (~mask + 1);
    const std::size_t rest = mask ^ low;
    // enumerate parts containing the lowest member
    for (std::size_t sub = rest;; sub = (sub - 1) & rest) {
      const std::size_t part = sub | low;
      if (feasible[part] && best[mask ^ part] != kUnset) {
        best[mask] = std::min(best[mask], best[mask ^ part] + 1);
      }
      if (sub == 0) break;
    }
  }
  return best[full];
}

}  // namespace

std::size_t entropy_count(const VectorSequence& points, double lambda, EntropyMethod method) {
  if (points.empty()) throw DomainError("entropy_count: no points");
  if (!(lambda > 0.0)) throw DomainError("entropy_count: lambda must be positive");
  if (method == EntropyMethod::exact) return exact_cover(points, lambda);
  return greedy_from_radii(farthest_point_radii(points), lambda);
}

std::size_t EntropyProfile::count(double lambda) const {
  if (lambda >= radius) return 1;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (lambda < breakpoints[i + 1]) return counts[i];
  }
  return 1;
}

std::size_t EntropyProfile::effective(double lambda) const { return lambda >= radius ? 0 : count(lambda); }

EntropyProfile greedy_entropy_profile(const VectorSequence& points) {
  if (points.empty()) throw DomainError("greedy_entropy_profile: no points");
  EntropyProfile profile;
  profile.radius = min_enclosing_ball(points).radius;
  if (profile.radius <= 0.0) return profile;

  std::vector<double> candidates{0.0, profile.radius};
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const double d = points.distance(i, j);
      for (double c : {d, 0.5 * d}) {
        if (c > 0.0 && c < profile.radius) candidates.push_back(c);
      }
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  const std::vector<double> radii = farthest_point_radii(points);
  profile.breakpoints.push_back(0.0);
  for (std::size_t i = 0; i + 1 < candidates.size(); ++i) {
    const double mid = 0.5 * (candidates[i] + candidates[i + 1]);
    const std::size_t c = greedy_from_radii(radii, mid);
    if (!profile.counts.empty() && profile.counts.back() == c) {
      profile.breakpoints.back() = candidates[i + 1];
    } else {
      profile.counts.push_back(c);
      profile.breakpoints.push_back(candidates[i + 1]);
    }
  }
  return profile;
}

double entropy_integral(const EntropyProfile& profile, double N, double q, EntropyIntegralKind kind) {
  if (!(N >= 1.0)) throw DomainError("entropy_integral: N must be >= 1");
  if (kind == EntropyIntegralKind::tech && !(q > 2.0)) {
    throw DomainError("entropy_integral: the tech integrand needs q > 2");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < profile.counts.size(); ++i) {
    const double m = static_cast<double>(profile.counts[i]);
    const double width = profile.breakpoints[i + 1] - profile.breakpoints[i];
    const double cap = kind == EntropyIntegralKind::tech ? std::sqrt(N) * std::pow(m, 1.0 / q) : std::sqrt(N);
    total += width * std::min(std::sqrt(m), cap);
  }
  return total;
}

double entropy_integral(const VectorSequence& points, double N, double q, EntropyIntegralKind kind) {
  return entropy_integral(greedy_entropy_profile(points), N, q, kind);
}

double lambda_entropy_sup(const EntropyProfile& profile, double r) {
  if (!(r > 2.0)) throw DomainError("lambda_entropy_sup: r must exceed 2");
  double best = 0.0;
  for (std::size_t i = 0; i < profile.counts.size(); ++i) {
    best = std::max(best, profile.breakpoints[i + 1] * std::pow(static_cast<double>(profile.counts[i]), 1.0 / r));
  }
  return best;
}

double lambda_entropy_sup(const VectorSequence& points, double r) {
  return lambda_entropy_sup(greedy_entropy_profile(points), r);
}

}  // namespace mflab

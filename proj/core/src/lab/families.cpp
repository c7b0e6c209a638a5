#include "mflab/lab/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "mflab/bump.hpp"
#include "mflab/errors.hpp"
#include "mflab/transform.hpp"

namespace mflab::lab {

const char* to_string(StrongFamily family) {
  switch (family) {
    case StrongFamily::window_gaussian:
      return "window-gaussian";
    case StrongFamily::signed_exponentials:
      return "signed-exponentials";
    case StrongFamily::narrow_atom:
      return "narrow-atom";
  }
  return "?";
}

const char* to_string(WeakFamily family) {
  switch (family) {
    case WeakFamily::delta:
      return "delta";
    case WeakFamily::haar_atom:
      return "haar-atom";
  }
  return "?";
}

namespace {

double uniform(Rng& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

std::int64_t uniform_int(Rng& rng, std::int64_t a, std::int64_t b) {
  return std::uniform_int_distribution<std::int64_t>(a, b)(rng);
}

cplx unit_phase(Rng& rng) {
  const double t = uniform(rng, 0.0, 2.0 * std::numbers::pi);
  return {std::cos(t), std::sin(t)};
}

// smooth bump of total width `width` centred at x0 on the torus
double envelope(const TorusGrid& grid, std::size_t m, double x0, double width) {
  const double P = grid.period();
  double d = grid.position(m) - x0;
  d -= P * std::round(d / P);
  return bump_profile(d / width, 0.25, 0.5);
}

}  // namespace

Input window_gaussian(const TorusGrid& grid, const std::vector<IndexInterval>& windows, Rng& rng) {
  std::normal_distribution<double> normal;
  Spectrum spectrum(grid);
  std::int64_t cells = 0;
  for (const auto& w : windows) {
    const std::int64_t lo = std::max(w.lo, grid.min_index());
    const std::int64_t hi = std::min(w.hi, grid.end_index());
    for (std::int64_t n = lo; n < hi; ++n) {
      spectrum.at(n) = {normal(rng), normal(rng)};
      ++cells;
    }
  }
  std::ostringstream d;
  d << "window-gaussian(windows=" << windows.size() << ";cells=" << cells << ")";
  return {inverse_transform(spectrum), d.str()};
}

Input signed_exponentials(const TorusGrid& grid, const std::vector<std::int64_t>& centers, Rng& rng) {
  const double P = grid.period();
  const double width = uniform(rng, P / 16.0, P / 4.0);
  std::vector<double> signs(centers.size());
  for (auto& s : signs) s = std::bernoulli_distribution(0.5)(rng) ? 1.0 : -1.0;
  Signal f(grid);
  for (std::size_t m = 0; m < grid.samples(); ++m) {
    const double env = envelope(grid, m, 0.5 * P, width);
    if (env == 0.0) continue;
    cplx acc{};
    for (std::size_t j = 0; j < centers.size(); ++j) acc += signs[j] * lattice_exponential(grid, centers[j], m);
    f.values[m] = env * acc;
  }
  std::ostringstream d;
  d << "signed-exponentials(terms=" << centers.size() << ";width=" << width << ")";
  return {std::move(f), d.str()};
}

Input narrow_atom(const TorusGrid& grid, const std::vector<std::int64_t>& centers, Rng& rng) {
  if (centers.empty()) throw PreconditionError("narrow_atom: no centre frequencies");
  const auto pick = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(centers.size()) - 1));
  const double width = uniform(rng, 8.0 * grid.step(), 1.0);
  const double x0 = uniform(rng, 0.0, grid.period());
  Signal f(grid);
  for (std::size_t m = 0; m < grid.samples(); ++m) {
    const double env = envelope(grid, m, x0, width);
    if (env != 0.0) f.values[m] = env * lattice_exponential(grid, centers[pick], m);
  }
  std::ostringstream d;
  d << "narrow-atom(xi=" << grid.frequency(centers[pick]) << ";width=" << width << ";x0=" << x0 << ")";
  return {std::move(f), d.str()};
}

Input delta_input(const TorusGrid& grid, Rng& rng) {
  const auto cell = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(grid.samples()) - 1));
  Signal f(grid);
  f.values[cell] = 1.0 / grid.step();
  return {std::move(f), "delta(cell=" + std::to_string(cell) + ")"};
}

Input haar_atom(const TorusGrid& grid, Rng& rng) {
  const int levels = static_cast<int>(std::log2(static_cast<double>(grid.samples())));
  const int a = static_cast<int>(uniform_int(rng, 1, std::max(1, levels - 4)));
  const std::size_t width = std::size_t{1} << a;
  const std::size_t blocks = grid.samples() / width;
  const auto block = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(blocks) - 1));
  const double height = 1.0 / (static_cast<double>(width) * grid.step());
  Signal f(grid);
  for (std::size_t i = 0; i < width; ++i) f.values[block * width + i] = i < width / 2 ? height : -height;
  std::ostringstream d;
  d << "haar-atom(start=" << block * width << ";cells=" << width << ")";
  return {std::move(f), d.str()};
}

Input strong_input(StrongFamily family, const TorusGrid& grid, const std::vector<IndexInterval>& windows,
                   const std::vector<std::int64_t>& centers, Rng& rng) {
  switch (family) {
    case StrongFamily::window_gaussian:
      return window_gaussian(grid, windows, rng);
    case StrongFamily::signed_exponentials:
      return signed_exponentials(grid, centers, rng);
    case StrongFamily::narrow_atom:
      return narrow_atom(grid, centers, rng);
  }
  throw PreconditionError("unknown input family");
}

Input weak_input(WeakFamily family, const TorusGrid& grid, Rng& rng) {
  return family == WeakFamily::delta ? delta_input(grid, rng) : haar_atom(grid, rng);
}

FrequencySet random_separated_set(const TorusGrid& grid, std::size_t N, Rng& rng) {
  const auto half = static_cast<std::int64_t>(std::floor(grid.nyquist() / 2.0));
  std::vector<std::int64_t> candidates;
  for (std::int64_t v = -half; v < half; ++v) candidates.push_back(v);
  if (N > candidates.size()) throw PreconditionError("random_separated_set: N exceeds the available integers");
  for (std::size_t i = 0; i < N; ++i) {
    const auto j = static_cast<std::size_t>(uniform_int(rng, static_cast<std::int64_t>(i),
                                                        static_cast<std::int64_t>(candidates.size()) - 1));
    std::swap(candidates[i], candidates[j]);
  }
  const auto P = static_cast<std::int64_t>(grid.period());
  std::vector<std::int64_t> indices;
  for (std::size_t i = 0; i < N; ++i) indices.push_back(candidates[i] * P);
  return FrequencySet::from_indices(grid, std::move(indices));
}

FrequencySet random_lattice_set(const TorusGrid& grid, std::size_t N, Rng& rng) {
  const auto P = static_cast<std::int64_t>(grid.period());
  const auto reach = static_cast<std::int64_t>(std::floor(grid.nyquist() / 2.0)) * P;
  if (static_cast<double>(N) > 0.5 * static_cast<double>(2 * reach)) {
    throw PreconditionError("random_lattice_set: N too large for the band");
  }
  std::set<std::int64_t> chosen;
  while (chosen.size() < N) {
    const std::int64_t n = uniform_int(rng, -reach + 1, reach - 1);
    if (n % P != 0) chosen.insert(n);
  }
  return FrequencySet::from_indices(grid, std::vector<std::int64_t>(chosen.begin(), chosen.end()));
}

RoughMultiplierSpec random_rough_spec(const TorusGrid& grid, std::size_t count, Rng& rng, bool with_symbols) {
  const auto length = static_cast<std::int64_t>(grid.period() / 2.0);
  const auto reach = static_cast<std::int64_t>(std::floor(0.9 * grid.nyquist() * grid.period()));
  const std::int64_t slots = (2 * reach) / length;
  if (static_cast<std::int64_t>(count) > slots) throw PreconditionError("random_rough_spec: too many intervals");
  std::vector<std::int64_t> order(static_cast<std::size_t>(slots));
  for (std::int64_t s = 0; s < slots; ++s) order[static_cast<std::size_t>(s)] = s;
  for (std::size_t i = 0; i < count; ++i) {
    const auto j = static_cast<std::size_t>(uniform_int(rng, static_cast<std::int64_t>(i), slots - 1));
    std::swap(order[i], order[j]);
  }
  std::sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(count));

  RoughMultiplierSpec spec{grid, {}};
  for (std::size_t i = 0; i < count; ++i) {
    RoughPiece piece;
    piece.omega = {-reach + order[i] * length, -reach + (order[i] + 1) * length};
    piece.d = unit_phase(rng);
    if (with_symbols) {
      const auto breaks = uniform_int(rng, 1, 4);
      std::vector<std::int64_t> cuts;
      for (std::int64_t b = 0; b < breaks; ++b) cuts.push_back(uniform_int(rng, 1, length - 1));
      std::sort(cuts.begin(), cuts.end());
      cuts.push_back(length);
      std::int64_t at = 0;
      for (std::int64_t cut : cuts) {
        const cplx value = std::sqrt(uniform(rng, 0.0, 1.0)) * unit_phase(rng);
        for (; at < cut; ++at) piece.symbol.push_back(value);
      }
    }
    spec.pieces.push_back(std::move(piece));
  }
  return spec;
}

std::vector<IndexInterval> sigma_windows(const FrequencySet& sigma, int k, double u) {
  const auto cells = static_cast<double>(tile_cells(sigma.grid(), k));
  const auto reach = static_cast<std::int64_t>(std::floor(0.5 * u * cells));
  std::vector<IndexInterval> out;
  for (std::int64_t n : sigma.indices()) out.push_back({n - reach, n + reach + 1});
  return out;
}

}  // namespace mflab::lab

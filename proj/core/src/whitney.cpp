#include "mflab/whitney.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "mflab/bump.hpp"
#include "mflab/errors.hpp"

namespace mflab {

namespace {

constexpr std::int64_t kMinOmegaCells = std::int64_t{1} << 12;

double position(std::int64_t n) { return static_cast<double>(n) + 0.5; }

std::size_t max_overlap(const std::vector<WhitneyPiece>& pieces, double factor) {
  std::vector<std::pair<double, int>> events;
  events.reserve(2 * pieces.size());
  for (const auto& p : pieces) {
    const auto [a, b] = p.dilate(factor);
    events.emplace_back(a, +1);
    events.emplace_back(b, -1);
  }
  // half-open dilates: a closing edge is processed before an opening one at the same point
  std::sort(events.begin(), events.end());
  int depth = 0;
  int best = 0;
  for (const auto& e : events) {
    depth += e.second;
    best = std::max(best, depth);
  }
  return static_cast<std::size_t>(best);
}

struct Transition {
  double start;
  double width;
  double at(double x) const { return smoothstep((x - start) / width); }
};

}  // namespace

std::pair<double, double> WhitneyPiece::dilate(double c) const {
  const double half = 0.5 * c * static_cast<double>(cells());
  return {center() - half, center() + half};
}

std::vector<double> WhitneySystem::partition_sum(IndexInterval range) const {
  std::vector<double> sum(static_cast<std::size_t>(std::max<std::int64_t>(range.length(), 0)), 0.0);
  for (const auto& w : windows) {
    const std::int64_t lo = std::max(range.lo, w.phi.first);
    const std::int64_t hi = std::min(range.hi, w.phi.end());
    for (std::int64_t n = lo; n < hi; ++n) sum[static_cast<std::size_t>(n - range.lo)] += w.phi.at(n);
  }
  return sum;
}

WhitneySystem whitney_decompose(const TorusGrid& grid, IndexInterval omega, std::int64_t min_cells) {
  if (omega.lo < grid.min_index() || omega.hi > grid.end_index() || omega.empty()) {
    throw PreconditionError("whitney_decompose: omega must be a nonempty part of the band");
  }
  if (omega.length() < kMinOmegaCells) {
    std::ostringstream msg;
    msg << "whitney_decompose: omega spans " << omega.length() << " lattice cells, need at least "
        << kMinOmegaCells;
    throw ResolutionError(msg.str());
  }
  if (min_cells < 1) throw PreconditionError("whitney_decompose: min_cells must be >= 1");

  WhitneySystem sys;
  sys.grid = grid;
  sys.omega = omega;
  sys.min_cells = min_cells;

  const double lo_edge = static_cast<double>(omega.lo);
  const double hi_edge = static_cast<double>(omega.hi);
  std::function<void(std::int64_t, std::int64_t)> visit = [&](std::int64_t lo, std::int64_t size) {
    const std::int64_t hi = lo + size;
    if (hi <= omega.lo || lo >= omega.hi) return;
    if (lo >= omega.lo && hi <= omega.hi) {
      WhitneyPiece piece{IndexInterval{lo, hi}, false};
      const auto [a, b] = piece.dilate(100.0);
      if (a >= lo_edge && b <= hi_edge) {
        sys.pieces.push_back(piece);
        return;
      }
      if (size <= min_cells) {
        piece.flagged = true;
        sys.pieces.push_back(piece);
        return;
      }
    }
    visit(lo, size / 2);
    visit(lo + size / 2, size / 2);
  };
  const auto half_band = static_cast<std::int64_t>(grid.samples() / 2);
  visit(-half_band, half_band);
  visit(0, half_band);

  std::int64_t flagged = 0;
  for (const auto& p : sys.pieces) {
    if (p.flagged) flagged += p.cells();
    ++sys.per_scale[p.cells()];
  }
  for (const auto& [len, count] : sys.per_scale) sys.R = std::max(sys.R, count);
  sys.flagged_mass = static_cast<double>(flagged) / static_cast<double>(omega.length());
  sys.overlap_K = max_overlap(sys.pieces, 20.0);
  return sys;
}

WhitneySystem window_system(WhitneySystem sys) {
  const std::size_t count = sys.pieces.size();
  if (count == 0) throw PreconditionError("window_system: empty skeleton");
  for (std::size_t i = 0; i + 1 < count; ++i) {
    if (sys.pieces[i].u.hi != sys.pieces[i + 1].u.lo) {
      throw PreconditionError("window_system: pieces do not tile omega");
    }
  }
  const TorusGrid& grid = sys.grid;

  std::vector<Transition> transitions;
  for (std::size_t i = 0; i + 1 < count; ++i) {
    const double left = static_cast<double>(sys.pieces[i].cells());
    const double right = static_cast<double>(sys.pieces[i + 1].cells());
    const double b = static_cast<double>(sys.pieces[i].u.hi);
    const double wl = std::min(0.5 * left, 1.5 * right);
    const double wr = std::min(0.5 * right, 1.5 * left);
    transitions.push_back({b - wl, wl + wr});
  }

  sys.windows.assign(count, WhitneyWindows{});
  sys.C1 = 0.0;
  sys.C2 = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const WhitneyPiece& piece = sys.pieces[i];
    WhitneyWindows& w = sys.windows[i];
    const double L = static_cast<double>(piece.cells());
    const double envelope = 4.0 * L;

    const double from = i > 0 ? transitions[i - 1].start : static_cast<double>(sys.omega.lo);
    const double to = i + 1 < count ? transitions[i].start + transitions[i].width : static_cast<double>(sys.omega.hi);
    const auto first = std::max(sys.omega.lo, static_cast<std::int64_t>(std::floor(from - 0.5)));
    const auto last = std::min(sys.omega.hi, static_cast<std::int64_t>(std::ceil(to - 0.5)) + 1);
    w.phi.first = first;
    for (std::int64_t n = first; n < last; ++n) {
      const double x = position(n);
      const double rise = i > 0 ? transitions[i - 1].at(x) : 1.0;
      const double fall = i + 1 < count ? transitions[i].at(x) : 0.0;
      w.phi.values.push_back(rise - fall);
    }

    for (std::int64_t n = w.phi.first - 1; n <= w.phi.end(); ++n) {
      if (n - 1 < sys.omega.lo || n + 1 >= sys.omega.hi) continue;
      const double d1 = std::abs(w.phi.at(n + 1) - w.phi.at(n));
      const double d2 = std::abs(w.phi.at(n + 1) - 2.0 * w.phi.at(n) + w.phi.at(n - 1));
      sys.C1 = std::max(sys.C1, d1 * envelope);
      sys.C2 = std::max(sys.C2, d2 * envelope * envelope);
    }

    const double c = piece.center();
    const auto a_first = std::max(grid.min_index(), static_cast<std::int64_t>(std::floor(c - 7.5 * L - 0.5)));
    const auto a_last = std::min(grid.end_index(), static_cast<std::int64_t>(std::ceil(c + 7.5 * L - 0.5)) + 1);
    w.A.first = a_first;
    for (std::int64_t n = a_first; n < a_last; ++n) w.A.values.push_back(bump_profile(position(n) - c, 5.0 * L, 7.5 * L));

    const BumpShape eta = bump_shape(BumpKind::eta);
    // eta at width |I|/1000: support |I|/1000, plateau |I|/2000 (cells)
    const double support = envelope / 1000.0;
    const double plateau = support * eta.plateau / eta.support;
    if (2.0 * plateau < 8.0) {
      w.eta_degenerate = true;
      w.eta.first = 0;
      w.eta.values = {grid.period()};
    } else {
      const auto reach = static_cast<std::int64_t>(std::floor(support));
      w.eta.first = -reach;
      double total = 0.0;
      for (std::int64_t n = -reach; n <= reach; ++n) {
        const double v = bump_profile(static_cast<double>(n), plateau, support);
        w.eta.values.push_back(v);
        total += v;
      }
      for (auto& v : w.eta.values) v *= grid.period() / total;
    }
  }
  return sys;
}

}  // namespace mflab

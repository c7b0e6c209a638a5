#include "mflab/bump.hpp"

#include <cmath>
#include <sstream>

#include "mflab/errors.hpp"

namespace mflab {

BumpShape bump_shape(BumpKind kind) {
  switch (kind) {
    case BumpKind::phi:
      return {0.25, 0.5};
    case BumpKind::psi:
      return {0.25, 0.5};
    case BumpKind::A:
      return {1.4, 1.6};
    case BumpKind::eta:
      return {0.05, 0.1};
  }
  return {0.25, 0.5};
}

const char* to_string(BumpKind kind) {
  switch (kind) {
    case BumpKind::phi:
      return "phi";
    case BumpKind::psi:
      return "psi";
    case BumpKind::A:
      return "A";
    case BumpKind::eta:
      return "eta";
  }
  return "?";
}

double smoothstep(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / t);
  const double b = std::exp(-1.0 / (1.0 - t));
  return a / (a + b);
}

double bump_profile(double xi, double plateau, double support) {
  const double d = std::abs(xi);
  if (d <= plateau) return 1.0;
  if (d >= support) return 0.0;
  return smoothstep((support - d) / (support - plateau));
}

double bump_profile(BumpKind kind, double xi) {
  const BumpShape shape = bump_shape(kind);
  return bump_profile(xi, shape.plateau, shape.support);
}

double SmoothBump::operator()(double xi) const { return bump_profile(xi, plateau, support); }

double SmoothBump::at_index(std::int64_t n) const {
  if (n < -half_extent || n > half_extent) return 0.0;
  return values[static_cast<std::size_t>(n + half_extent)];
}

SmoothBump make_bump(BumpKind kind, const TorusGrid& grid, double scale) {
  if (!(scale > 0.0)) throw PreconditionError("make_bump: scale must be positive");
  const BumpShape shape = bump_shape(kind);
  SmoothBump bump;
  bump.kind = kind;
  bump.grid = grid;
  bump.scale = scale;
  bump.plateau = shape.plateau * scale;
  bump.support = shape.support * scale;

  const double plateau_cells = 2.0 * bump.plateau * grid.period();
  if (plateau_cells < 8.0) {
    std::ostringstream msg;
    msg << "make_bump(" << to_string(kind) << "): plateau spans " << plateau_cells
        << " lattice cells, need at least 8";
    throw ResolutionError(msg.str());
  }
  if (bump.support >= grid.nyquist()) {
    throw ResolutionError("make_bump: support reaches the Nyquist frequency");
  }

  bump.half_extent = static_cast<std::int64_t>(std::floor(bump.support * grid.period()));
  bump.values.resize(static_cast<std::size_t>(2 * bump.half_extent + 1));
  double total = 0.0;
  for (std::int64_t n = -bump.half_extent; n <= bump.half_extent; ++n) {
    const double v = bump(grid.frequency(n));
    bump.values[static_cast<std::size_t>(n + bump.half_extent)] = v;
    total += v;
  }
  if (kind == BumpKind::eta) {
    bump.normalization = grid.period() / total;
  }
  return bump;
}

}  // namespace mflab

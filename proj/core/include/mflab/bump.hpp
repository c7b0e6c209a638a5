#pragma once

#include <cstdint>
#include <vector>

#include "mflab/grid.hpp"

namespace mflab {

/// The band-limited bumps used throughout, all built on the same smooth
/// transition template.
///
///   phi : plateau |xi| <= 1/4, support |xi| <= 1/2
///   psi : plateau |xi| <= 1/4, support |xi| <= 1/2
///   A   : plateau |xi| <= 1.4, support |xi| <= 1.6
///   eta : plateau |xi| <= 0.05, support |xi| <= 0.1, normalized to mean one
enum class BumpKind { phi, psi, A, eta };

struct BumpShape {
  double plateau;
  double support;
};

BumpShape bump_shape(BumpKind kind);
const char* to_string(BumpKind kind);

/// S(t) = s(t) / (s(t) + s(1-t)) with s(t) = exp(-1/t) for t > 0, else 0.
double smoothstep(double t);

/// Even profile equal to one on |xi| <= plateau and zero for |xi| >= support.
double bump_profile(double xi, double plateau, double support);
double bump_profile(BumpKind kind, double xi);

/// A bump dilated by `scale` and tabulated on the frequency lattice.
struct SmoothBump {
  BumpKind kind = BumpKind::phi;
  TorusGrid grid;
  double scale = 1.0;
  double plateau = 0.0;  ///< physical half-width of the plateau
  double support = 0.0;  ///< physical half-width of the support
  std::int64_t half_extent = 0;
  std::vector<double> values;  ///< profile at indices -half_extent..half_extent, in [0, 1]
  double normalization = 1.0;  ///< multiply to obtain a mean-one density (eta only)

  /// Profile value at a physical frequency.
  double operator()(double xi) const;
  /// Tabulated profile value at lattice index n (zero off the table).
  double at_index(std::int64_t n) const;
  /// normalization * at_index(n); integrates to one against df = 1/P for eta.
  double density_at_index(std::int64_t n) const { return normalization * at_index(n); }
};

/// Throws ResolutionError when the dilated plateau spans fewer than 8 lattice cells.
SmoothBump make_bump(BumpKind kind, const TorusGrid& grid, double scale = 1.0);

}  // namespace mflab

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "mflab/grid.hpp"

namespace mflab {

/// Real-valued table over consecutive lattice indices first, first+1, ...
struct LocalTable {
  std::int64_t first = 0;
  std::vector<double> values;

  std::int64_t end() const { return first + static_cast<std::int64_t>(values.size()); }
  double at(std::int64_t n) const {
    return (n < first || n >= end()) ? 0.0 : values[static_cast<std::size_t>(n - first)];
  }
};

/// A Whitney piece u: aligned dyadic block of lattice cells [lo, hi).
struct WhitneyPiece {
  IndexInterval u;
  bool flagged = false;  ///< boundary piece exempt from the 100u condition

  double center() const { return 0.5 * static_cast<double>(u.lo + u.hi); }
  std::int64_t cells() const { return u.length(); }
  /// Concentric dilate c*u as a continuous interval in index units.
  std::pair<double, double> dilate(double c) const;
  /// I(u) = 4u.
  std::pair<double, double> envelope() const { return dilate(4.0); }
};

struct WhitneyWindows {
  LocalTable phi;  ///< partition-of-unity piece, supported in I(u) and in omega
  LocalTable A;    ///< one on 10u, zero off 15u
  LocalTable eta;  ///< mean-one density at width |I(u)|/1000 (delta when unresolved)
  bool eta_degenerate = false;
};

/// Whitney decomposition of a frequency interval omega (lattice cells) with
/// optional window symbols.
struct WhitneySystem {
  TorusGrid grid;
  IndexInterval omega;
  std::int64_t min_cells = 1;
  std::vector<WhitneyPiece> pieces;  ///< sorted, a partition of omega
  std::size_t overlap_K = 0;         ///< max_x #{u : x in 20u}
  std::map<std::int64_t, std::size_t> per_scale;  ///< piece length (cells) -> count
  std::size_t R = 0;                              ///< max of per_scale
  double flagged_mass = 0.0;                      ///< flagged cells / |omega|

  std::vector<WhitneyWindows> windows;  ///< filled by window_system
  double C2 = 0.0;  ///< max_u max |second difference of phi_u| * |I(u)|^2 (cells), inside omega
  double C1 = 0.0;  ///< same for first differences, times |I(u)|

  bool has_windows() const { return windows.size() == pieces.size() && !pieces.empty(); }
  /// Sum of all phi_u on the lattice over [lo, hi).
  std::vector<double> partition_sum(IndexInterval range) const;
};

/// Top-down dyadic selection on the lattice: a block inside omega is kept when
/// its 100-fold concentric dilate stays in omega, or flagged when it is at
/// most `min_cells` long; every other block meeting omega is split in two.
/// Throws ResolutionError when omega has fewer than 2^12 cells.
WhitneySystem whitney_decompose(const TorusGrid& grid, IndexInterval omega, std::int64_t min_cells = 1);

/// Adds phi_u, A_u and eta_u to every piece and measures C1, C2.
///
/// phi_u are differences of cumulative smoothsteps centred on the piece
/// boundaries, so they telescope to 1_omega. The transition at a boundary
/// between pieces of lengths L1 | L2 spans [b - min(L1/2, 1.5 L2), b + min(L2/2, 1.5 L1)],
/// which keeps supp phi_u inside 4u.
WhitneySystem window_system(WhitneySystem skeleton);

}  // namespace mflab

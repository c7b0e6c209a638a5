#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mflab/grid.hpp"

namespace mflab {

struct LayerPiece {
  IndexInterval interval;
  cplx d;
};

/// g = sum_j sum_I d_I 1_I + remainder on the lattice.
struct LayeredSymbol {
  TorusGrid grid;
  double r = 2.0;
  double tol = 0.0;
  double v = 0.0;  ///< ||g||_{V^r} over `window`
  IndexInterval window;
  int j_max = 0;
  std::vector<std::vector<LayerPiece>> layers;  ///< layers[j], pieces sorted and disjoint
  SpectralSymbol remainder;

  double threshold(int j) const;  ///< eps_j = 2^{-j/r} v
  SpectralSymbol layer_symbol(int j) const;
  SpectralSymbol reconstruct() const;
};

/// Stopping-time decomposition of a V^r symbol.
///
/// For each level j a new stop is placed whenever |g - g(last stop)| exceeds
/// eps_j, and g_j is the resulting step function. Layer j holds g_j - g_{j-1}
/// as disjoint constant runs. Stops per level are at most 2^j, so a layer has
/// at most 2^{j+1} + 2 pieces with |d_I| <= (1 + 2^{1/r}) eps_j.
///
/// The window defaults to the support of g plus one zero cell on each side
/// (clipped to the band), so v accounts for the jumps to zero.
LayeredSymbol vr_layer_decompose(const SpectralSymbol& g, double r, double tol);
LayeredSymbol vr_layer_decompose(const SpectralSymbol& g, IndexInterval window, double r, double tol);

}  // namespace mflab

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "mflab/grid.hpp"
#include "mflab/symbols.hpp"
#include "mflab/variation.hpp"

namespace mflab {

struct ScaleRange {
  int k_min = 1;
  int k_max = 1;

  std::size_t size() const { return k_max >= k_min ? static_cast<std::size_t>(k_max - k_min + 1) : 0; }
  /// {1, ..., log2 P}.
  static ScaleRange defaults(const TorusGrid& grid);
};

/// One interval of a rough multiplier: constant coefficient d, or a full
/// symbol sampled on the interval (when `symbol` is nonempty).
struct RoughPiece {
  IndexInterval omega;
  cplx d{1.0, 0.0};
  std::vector<cplx> symbol;
};

struct RoughMultiplierSpec {
  TorusGrid grid;
  std::vector<RoughPiece> pieces;

  /// Throws SpecError on overlapping or out-of-band intervals, |d| > 1, or a
  /// symbol whose length differs from its interval.
  void validate() const;
  /// Largest ||m_omega||_{V^r} over the pieces with symbols.
  double max_vr_norm(double r) const;
};

Signal dk_apply(const Signal& f, const FrequencySet& sigma, int k, DkVariant variant);

/// Pointwise variation of (D_k f(x))_{k in range}. Throws DomainError when
/// q <= 2 or the range is empty.
Signal vq_dk(const Signal& f, const FrequencySet& sigma, double q, ScaleRange range, VariationMode mode,
             DkVariant variant = DkVariant::separated, std::size_t threads = 1);

/// Lattice indicator of the closed 2^-j neighbourhood of sigma.
SpectralSymbol neighbourhood_indicator(const FrequencySet& sigma, int j);

/// max_j |(f^ 1_{R_j})^v|.
Signal sharp_maximal(const Signal& f, const FrequencySet& sigma, ScaleRange range);

/// (sum d_omega 1_omega f^)^v.
Signal rough_T(const Signal& f, const RoughMultiplierSpec& spec);

enum class RvarPath { direct, layered };

/// (sum m_omega f^)^v, either from the assembled symbol or as a sum of rough_T
/// over the V^r layers of each m_omega (remainders dropped).
Signal rvar_M(const Signal& f, const RoughMultiplierSpec& spec, RvarPath path, double r = 2.0, double tol = 1e-6);

/// Sum of the pieces' symbols (constant d where no symbol is given).
SpectralSymbol assemble_symbol(const RoughMultiplierSpec& spec);

/// m_omega on a run of lattice indices.
struct TileSymbol {
  std::int64_t first = 0;
  std::vector<cplx> values;
};

using TileSymbolFamily = std::function<TileSymbol(const DyadicFreqInterval&)>;

/// Symbol of Delta_k: sum of m_omega over the tiles of length 2^-k meeting sigma.
/// With `require_tile_support`, a nonzero value outside omega raises SpecError.
SpectralSymbol delta_k_symbol(const TorusGrid& grid, const TileSymbolFamily& family, const FrequencySet& sigma, int k,
                              bool require_tile_support = true);

Signal delta_k(const Signal& f, const TileSymbolFamily& family, const FrequencySet& sigma, int k,
               bool require_tile_support = true);

/// phi_omega as a tile family: phi^((xi - xi_omega)/|omega|), which spills
/// outside omega, so use it with require_tile_support = false.
TileSymbolFamily phi_tile_family(const TorusGrid& grid);

struct CorollaryConstants {
  double vt = 0.0;              ///< sup_j nonhomogeneous V^t of k -> sum_omega m_omega(xi_j)
  double vt_homogeneous = 0.0;  ///< same without the sup term
  double d2 = 0.0;              ///< sup |omega|^2 |m_omega''|, second differences on the lattice
};

/// Throws DomainError when t <= 2 and ResolutionError when a tile has fewer
/// than three lattice points.
CorollaryConstants corollary_constants(const TorusGrid& grid, const TileSymbolFamily& family,
                                       const FrequencySet& sigma, ScaleRange range, double t,
                                       bool require_tile_support = true);

}  // namespace mflab

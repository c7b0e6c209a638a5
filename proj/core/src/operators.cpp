#include "mflab/operators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "mflab/bump.hpp"
#include "mflab/errors.hpp"
#include "mflab/layers.hpp"
#include "mflab/parallel.hpp"
#include "mflab/transform.hpp"

namespace mflab {

ScaleRange ScaleRange::defaults(const TorusGrid& grid) {
  return {1, static_cast<int>(std::lround(std::log2(grid.period())))};
}

void RoughMultiplierSpec::validate() const {
  std::vector<IndexInterval> sorted;
  sorted.reserve(pieces.size());
  for (const auto& p : pieces) {
    if (p.omega.empty()) throw SpecError("rough multiplier: empty interval");
    if (p.omega.lo < grid.min_index() || p.omega.hi > grid.end_index()) {
      throw SpecError("rough multiplier: interval leaves the frequency band");
    }
    if (std::abs(p.d) > 1.0 + 1e-12) throw SpecError("rough multiplier: |d_omega| exceeds 1");
    if (!p.symbol.empty() && static_cast<std::int64_t>(p.symbol.size()) != p.omega.length()) {
      throw SpecError("rough multiplier: symbol length differs from its interval");
    }
    sorted.push_back(p.omega);
  }
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i - 1].overlaps(sorted[i])) throw SpecError("rough multiplier: intervals overlap");
  }
}

double RoughMultiplierSpec::max_vr_norm(double r) const {
  double best = 0.0;
  for (const auto& p : pieces) {
    if (p.symbol.empty()) {
      best = std::max(best, std::abs(p.d));
    } else {
      best = std::max(best, symbol_vr_norm(p.symbol, r));
    }
  }
  return best;
}

Signal dk_apply(const Signal& f, const FrequencySet& sigma, int k, DkVariant variant) {
  require_same_grid(f.grid, sigma.grid(), "dk_apply");
  return apply_multiplier(f, build_dk_symbol(sigma, k, variant));
}

Signal vq_dk(const Signal& f, const FrequencySet& sigma, double q, ScaleRange range, VariationMode mode,
             DkVariant variant, std::size_t threads) {
  if (!(q > 2.0)) throw DomainError("vq_dk: q must exceed 2");
  if (range.size() == 0) throw DomainError("vq_dk: empty scale range");
  require_same_grid(f.grid, sigma.grid(), "vq_dk");
  const TorusGrid& grid = f.grid;
  const std::size_t M = grid.samples();
  const std::size_t K = range.size();

  const Spectrum spectrum = forward_transform(f);
  std::vector<std::vector<cplx>> outputs(K);
  for (std::size_t s = 0; s < K; ++s) {
    const SpectralSymbol symbol = build_dk_symbol(sigma, range.k_min + static_cast<int>(s), variant);
    Spectrum product(grid);
    for (std::size_t i = 0; i < M; ++i) product.values[i] = spectrum.values[i] * symbol.values[i];
    outputs[s] = inverse_transform(product).values;
  }

  Signal out(grid);
  constexpr std::size_t kChunk = 4096;
  const std::size_t chunks = (M + kChunk - 1) / kChunk;
  parallel_for(chunks, threads, [&](std::size_t c) {
    std::vector<cplx> seq(K);
    const std::size_t end = std::min(M, (c + 1) * kChunk);
    for (std::size_t m = c * kChunk; m < end; ++m) {
      for (std::size_t s = 0; s < K; ++s) seq[s] = outputs[s][m];
      out.values[m] = variation_norm(seq, q, mode);
    }
  });
  return out;
}

SpectralSymbol neighbourhood_indicator(const FrequencySet& sigma, int j) {
  const TorusGrid& grid = sigma.grid();
  const auto reach = static_cast<std::int64_t>(std::floor(std::ldexp(grid.period(), -j)));
  SpectralSymbol symbol(grid);
  for (std::int64_t c : sigma.indices()) {
    const std::int64_t lo = std::max(grid.min_index(), c - reach);
    const std::int64_t hi = std::min(grid.end_index() - 1, c + reach);
    for (std::int64_t n = lo; n <= hi; ++n) symbol.at(n) = 1.0;
  }
  return symbol;
}

Signal sharp_maximal(const Signal& f, const FrequencySet& sigma, ScaleRange range) {
  require_same_grid(f.grid, sigma.grid(), "sharp_maximal");
  if (range.size() == 0) throw DomainError("sharp_maximal: empty scale range");
  const TorusGrid& grid = f.grid;
  for (int j = range.k_min; j <= range.k_max; ++j) tile_cells(grid, j);
  const Spectrum spectrum = forward_transform(f);
  Signal out(grid);
  for (int j = range.k_min; j <= range.k_max; ++j) {
    const SpectralSymbol indicator = neighbourhood_indicator(sigma, j);
    Spectrum product(grid);
    for (std::size_t i = 0; i < grid.samples(); ++i) product.values[i] = spectrum.values[i] * indicator.values[i];
    const Signal projected = inverse_transform(product);
    for (std::size_t m = 0; m < grid.samples(); ++m) {
      out.values[m] = std::max(out.values[m].real(), std::abs(projected.values[m]));
    }
  }
  return out;
}

SpectralSymbol assemble_symbol(const RoughMultiplierSpec& spec) {
  spec.validate();
  SpectralSymbol symbol(spec.grid);
  for (const auto& p : spec.pieces) {
    for (std::int64_t n = p.omega.lo; n < p.omega.hi; ++n) {
      symbol.at(n) = p.symbol.empty() ? p.d : p.symbol[static_cast<std::size_t>(n - p.omega.lo)];
    }
  }
  return symbol;
}

Signal rough_T(const Signal& f, const RoughMultiplierSpec& spec) {
  require_same_grid(f.grid, spec.grid, "rough_T");
  spec.validate();
  SpectralSymbol symbol(spec.grid);
  for (const auto& p : spec.pieces) {
    for (std::int64_t n = p.omega.lo; n < p.omega.hi; ++n) symbol.at(n) = p.d;
  }
  return apply_multiplier(f, symbol);
}

Signal rvar_M(const Signal& f, const RoughMultiplierSpec& spec, RvarPath path, double r, double tol) {
  require_same_grid(f.grid, spec.grid, "rvar_M");
  if (path == RvarPath::direct) return apply_multiplier(f, assemble_symbol(spec));

  spec.validate();
  const TorusGrid& grid = spec.grid;
  std::map<int, std::vector<LayerPiece>> by_level;
  for (const auto& p : spec.pieces) {
    SpectralSymbol local(grid);
    for (std::int64_t n = p.omega.lo; n < p.omega.hi; ++n) {
      local.at(n) = p.symbol.empty() ? p.d : p.symbol[static_cast<std::size_t>(n - p.omega.lo)];
    }
    const LayeredSymbol layered = vr_layer_decompose(local, p.omega, r, tol);
    for (std::size_t j = 0; j < layered.layers.size(); ++j) {
      auto& bucket = by_level[static_cast<int>(j)];
      for (const auto& piece : layered.layers[j]) {
        if (piece.d != cplx{}) bucket.push_back(piece);
      }
    }
  }

  Signal out(grid);
  for (const auto& [j, pieces] : by_level) {
    if (pieces.empty()) continue;
    double scale = 0.0;
    for (const auto& piece : pieces) scale = std::max(scale, std::abs(piece.d));
    RoughMultiplierSpec layer{grid, {}};
    layer.pieces.reserve(pieces.size());
    for (const auto& piece : pieces) layer.pieces.push_back(RoughPiece{piece.interval, piece.d / scale, {}});
    const Signal part = rough_T(f, layer);
    for (std::size_t m = 0; m < grid.samples(); ++m) out.values[m] += scale * part.values[m];
  }
  return out;
}

namespace {

void check_tile(const TorusGrid& grid, const DyadicFreqInterval& tile, const TileSymbol& ts, bool require_tile_support) {
  const IndexInterval range = tile.index_range(grid);
  for (std::size_t i = 0; i < ts.values.size(); ++i) {
    const std::int64_t n = ts.first + static_cast<std::int64_t>(i);
    if (ts.values[i] == cplx{}) continue;
    if (!grid.contains_index(n)) throw SpecError("tile symbol leaves the frequency band");
    if (require_tile_support && !range.contains(n)) {
      std::ostringstream msg;
      msg << "tile symbol at scale " << tile.k << " is nonzero outside its tile " << tile.m;
      throw SpecError(msg.str());
    }
  }
}

}  // namespace

SpectralSymbol delta_k_symbol(const TorusGrid& grid, const TileSymbolFamily& family, const FrequencySet& sigma, int k,
                              bool require_tile_support) {
  require_same_grid(grid, sigma.grid(), "delta_k");
  SpectralSymbol symbol(grid);
  for (const auto& tile : occupied_tiles(sigma, k)) {
    const TileSymbol ts = family(tile);
    check_tile(grid, tile, ts, require_tile_support);
    for (std::size_t i = 0; i < ts.values.size(); ++i) {
      if (ts.values[i] != cplx{}) symbol.at(ts.first + static_cast<std::int64_t>(i)) += ts.values[i];
    }
  }
  return symbol;
}

Signal delta_k(const Signal& f, const TileSymbolFamily& family, const FrequencySet& sigma, int k,
               bool require_tile_support) {
  return apply_multiplier(f, delta_k_symbol(f.grid, family, sigma, k, require_tile_support));
}

TileSymbolFamily phi_tile_family(const TorusGrid& grid) {
  return [grid](const DyadicFreqInterval& tile) {
    const auto width = static_cast<double>(tile.cells(grid));
    const std::int64_t center = tile.representative ? *tile.representative : tile.index_range(grid).lo;
    const auto reach = static_cast<std::int64_t>(std::floor(0.5 * width));
    TileSymbol ts;
    ts.first = center - reach;
    for (std::int64_t n = -reach; n <= reach; ++n) {
      ts.values.emplace_back(bump_profile(BumpKind::phi, static_cast<double>(n) / width));
    }
    return ts;
  };
}

CorollaryConstants corollary_constants(const TorusGrid& grid, const TileSymbolFamily& family,
                                       const FrequencySet& sigma, ScaleRange range, double t,
                                       bool require_tile_support) {
  if (!(t > 2.0)) throw DomainError("corollary_constants: t must exceed 2");
  if (range.size() == 0) throw DomainError("corollary_constants: empty scale range");
  require_same_grid(grid, sigma.grid(), "corollary_constants");

  CorollaryConstants out;
  const std::size_t N = sigma.size();
  std::vector<std::vector<cplx>> sequences(N, std::vector<cplx>(range.size()));
  for (int k = range.k_min; k <= range.k_max; ++k) {
    const std::int64_t cells = tile_cells(grid, k);
    if (cells < 3) throw ResolutionError("corollary_constants: tiles need at least three lattice points");
    const double scale2 = static_cast<double>(cells) * static_cast<double>(cells);
    const auto slot = static_cast<std::size_t>(k - range.k_min);
    for (const auto& tile : occupied_tiles(sigma, k)) {
      const TileSymbol ts = family(tile);
      check_tile(grid, tile, ts, require_tile_support);
      const auto size = static_cast<std::int64_t>(ts.values.size());
      auto value = [&](std::int64_t i) { return (i < 0 || i >= size) ? cplx{} : ts.values[static_cast<std::size_t>(i)]; };
      for (std::int64_t i = 1; i + 1 < size; ++i) {
        const double d2 = std::abs(value(i + 1) - 2.0 * value(i) + value(i - 1));
        out.d2 = std::max(out.d2, d2 * scale2);
      }
      for (std::size_t j = 0; j < N; ++j) {
        sequences[j][slot] += value(sigma.indices()[j] - ts.first);
      }
    }
  }
  for (const auto& seq : sequences) {
    out.vt = std::max(out.vt, variation_norm(seq, t, VariationMode::nonhomogeneous));
    out.vt_homogeneous = std::max(out.vt_homogeneous, variation_norm(seq, t, VariationMode::homogeneous));
  }
  return out;
}

}  // namespace mflab

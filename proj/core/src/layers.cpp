#include "mflab/layers.hpp"

#include <algorithm>
#include <cmath>

#include "mflab/errors.hpp"
#include "mflab/variation.hpp"

namespace mflab {

double LayeredSymbol::threshold(int j) const { return std::exp2(-static_cast<double>(j) / r) * v; }

SpectralSymbol LayeredSymbol::layer_symbol(int j) const {
  SpectralSymbol out(grid);
  if (j < 0 || static_cast<std::size_t>(j) >= layers.size()) return out;
  for (const auto& piece : layers[static_cast<std::size_t>(j)]) {
    for (std::int64_t n = piece.interval.lo; n < piece.interval.hi; ++n) out.at(n) += piece.d;
  }
  return out;
}

SpectralSymbol LayeredSymbol::reconstruct() const {
  SpectralSymbol out = remainder;
  for (const auto& layer : layers) {
    for (const auto& piece : layer) {
      for (std::int64_t n = piece.interval.lo; n < piece.interval.hi; ++n) out.at(n) += piece.d;
    }
  }
  return out;
}

namespace {

std::vector<cplx> step_approximant(std::span<const cplx> g, double eps) {
  std::vector<cplx> out(g.size());
  cplx held = g[0];
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (std::abs(g[i] - held) > eps) held = g[i];
    out[i] = held;
  }
  return out;
}

}  // namespace

LayeredSymbol vr_layer_decompose(const SpectralSymbol& g, double r, double tol) {
  const TorusGrid& grid = g.grid;
  std::int64_t lo = grid.end_index();
  std::int64_t hi = grid.min_index();
  for (std::int64_t n = grid.min_index(); n < grid.end_index(); ++n) {
    if (g.at(n) != cplx{}) {
      lo = std::min(lo, n);
      hi = std::max(hi, n + 1);
    }
  }
  if (lo >= hi) return vr_layer_decompose(g, IndexInterval{0, 1}, r, tol);
  lo = std::max(grid.min_index(), lo - 1);
  hi = std::min(grid.end_index(), hi + 1);
  return vr_layer_decompose(g, IndexInterval{lo, hi}, r, tol);
}

LayeredSymbol vr_layer_decompose(const SpectralSymbol& g, IndexInterval window, double r, double tol) {
  if (!(r >= 1.0)) throw DomainError("vr_layer_decompose: r must be >= 1");
  if (!(tol > 0.0 && tol < 1.0)) throw DomainError("vr_layer_decompose: tol must lie in (0, 1)");
  const TorusGrid& grid = g.grid;
  if (window.empty() || window.lo < grid.min_index() || window.hi > grid.end_index()) {
    throw DomainError("vr_layer_decompose: window must be a nonempty part of the band");
  }

  LayeredSymbol out;
  out.grid = grid;
  out.r = r;
  out.tol = tol;
  out.window = window;
  out.remainder = g;

  std::vector<cplx> samples;
  samples.reserve(static_cast<std::size_t>(window.length()));
  for (std::int64_t n = window.lo; n < window.hi; ++n) samples.push_back(g.at(n));
  for (const auto& s : samples) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) throw DomainError("vr_layer_decompose: g is not bounded");
  }
  out.v = symbol_vr_norm(samples, r);

  if (out.v == 0.0) {
    out.layers.push_back({LayerPiece{window, cplx{}}});
    return out;
  }

  // smallest j with 2^{-j/r} <= tol
  int j_max = static_cast<int>(std::ceil(r * std::log2(1.0 / tol)));
  while (j_max > 0 && out.threshold(j_max - 1) <= tol * out.v) --j_max;
  while (out.threshold(j_max) > tol * out.v) ++j_max;
  out.j_max = j_max;

  std::vector<cplx> previous(samples.size(), cplx{});
  for (int j = 0; j <= j_max; ++j) {
    const std::vector<cplx> current = step_approximant(samples, out.threshold(j));
    std::vector<LayerPiece> pieces;
    std::size_t i = 0;
    while (i < samples.size()) {
      const cplx d = current[i] - previous[i];
      std::size_t e = i + 1;
      while (e < samples.size() && current[e] - previous[e] == d) ++e;
      if (d != cplx{}) {
        pieces.push_back({IndexInterval{window.lo + static_cast<std::int64_t>(i), window.lo + static_cast<std::int64_t>(e)}, d});
      }
      i = e;
    }
    out.layers.push_back(std::move(pieces));
    previous = current;
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    out.remainder.at(window.lo + static_cast<std::int64_t>(i)) = samples[i] - previous[i];
  }
  return out;
}

}  // namespace mflab

#include "mflab/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "mflab/bump.hpp"
#include "mflab/errors.hpp"

namespace mflab {

FrequencySet::FrequencySet(const TorusGrid& grid, std::span<const double> frequencies) : grid_(grid) {
  indices_.reserve(frequencies.size());
  for (double xi : frequencies) indices_.push_back(grid.index_of(xi));
  validate_and_sort();
}

FrequencySet FrequencySet::from_indices(const TorusGrid& grid, std::vector<std::int64_t> indices) {
  FrequencySet set;
  set.grid_ = grid;
  set.indices_ = std::move(indices);
  set.validate_and_sort();
  return set;
}

void FrequencySet::validate_and_sort() {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw PreconditionError("frequency set contains duplicates");
  }
  for (std::int64_t n : indices_) {
    if (n <= grid_.min_index() || n >= grid_.end_index()) {
      std::ostringstream msg;
      msg << "frequency " << grid_.frequency(n) << " is not strictly below Nyquist " << grid_.nyquist();
      throw PreconditionError(msg.str());
    }
  }
  min_gap_ = std::numeric_limits<double>::infinity();
  for (std::size_t j = 1; j < indices_.size(); ++j) {
    min_gap_ = std::min(min_gap_, grid_.frequency(indices_[j] - indices_[j - 1]));
  }
}

std::vector<double> FrequencySet::frequencies() const {
  std::vector<double> out;
  out.reserve(indices_.size());
  for (auto n : indices_) out.push_back(grid_.frequency(n));
  return out;
}

double DyadicFreqInterval::length() const { return std::ldexp(1.0, -k); }

bool DyadicFreqInterval::resolvable(const TorusGrid& grid) const {
  return length() * grid.period() >= 1.0;
}

std::int64_t tile_cells(const TorusGrid& grid, int k) {
  const double cells = std::ldexp(grid.period(), -k);
  if (cells < 1.0) {
    std::ostringstream msg;
    msg << "scale 2^-" << k << " is finer than the lattice spacing 1/" << grid.period();
    throw ResolutionError(msg.str());
  }
  if (cells > static_cast<double>(grid.samples())) {
    throw ResolutionError("scale is coarser than the whole frequency band");
  }
  return static_cast<std::int64_t>(cells);
}

std::int64_t DyadicFreqInterval::cells(const TorusGrid& grid) const { return tile_cells(grid, k); }

IndexInterval DyadicFreqInterval::index_range(const TorusGrid& grid) const {
  const std::int64_t c = cells(grid);
  return {m * c, (m + 1) * c};
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::vector<DyadicFreqInterval> occupied_tiles(const FrequencySet& sigma, int k) {
  const std::int64_t cells = tile_cells(sigma.grid(), k);
  std::vector<DyadicFreqInterval> tiles;
  for (std::int64_t n : sigma.indices()) {
    const std::int64_t m = floor_div(n, cells);
    // indices are sorted, so the first hit in a tile is its smallest element
    if (tiles.empty() || tiles.back().m != m) {
      tiles.push_back(DyadicFreqInterval{k, m, n});
    }
  }
  return tiles;
}

void add_phi_window(SpectralSymbol& symbol, std::int64_t center_index, double width_cells) {
  const TorusGrid& grid = symbol.grid;
  const auto reach = static_cast<std::int64_t>(std::floor(0.5 * width_cells));
  if (center_index - reach <= grid.min_index() || center_index + reach >= grid.end_index()) {
    throw PreconditionError("D_k window crosses the Nyquist frequency");
  }
  for (std::int64_t n = center_index - reach; n <= center_index + reach; ++n) {
    const double v = bump_profile(BumpKind::phi, static_cast<double>(n - center_index) / width_cells);
    if (v != 0.0) symbol.at(n) += v;
  }
}

SpectralSymbol build_dk_symbol(const FrequencySet& sigma, int k, DkVariant variant) {
  const TorusGrid& grid = sigma.grid();
  const auto width = static_cast<double>(tile_cells(grid, k));
  SpectralSymbol symbol(grid);
  if (variant == DkVariant::separated) {
    if (!sigma.separated()) {
      throw PreconditionError("separated D_k requires 1-separated frequencies");
    }
    for (std::int64_t n : sigma.indices()) add_phi_window(symbol, n, width);
  } else {
    for (const auto& tile : occupied_tiles(sigma, k)) add_phi_window(symbol, *tile.representative, width);
  }
  return symbol;
}

}  // namespace mflab

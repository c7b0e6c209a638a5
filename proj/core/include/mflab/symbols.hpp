#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mflab/grid.hpp"

namespace mflab {

/// A finite set of lattice frequencies xi_1 < ... < xi_N.
class FrequencySet {
 public:
  FrequencySet() = default;
  /// Physical frequencies; each must lie on Z/P strictly inside the band.
  FrequencySet(const TorusGrid& grid, std::span<const double> frequencies);
  static FrequencySet from_indices(const TorusGrid& grid, std::vector<std::int64_t> indices);

  const TorusGrid& grid() const { return grid_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  const std::vector<std::int64_t>& indices() const { return indices_; }
  double frequency(std::size_t j) const { return grid_.frequency(indices_[j]); }
  std::vector<double> frequencies() const;

  /// min_{i != j} |xi_i - xi_j|; +inf for fewer than two frequencies.
  double min_gap() const { return min_gap_; }
  /// True iff min_gap() >= 1.
  bool separated() const { return min_gap_ >= 1.0; }

 private:
  void validate_and_sort();

  TorusGrid grid_;
  std::vector<std::int64_t> indices_;
  double min_gap_ = 0.0;
};

/// omega = [m 2^-k, (m+1) 2^-k) in physical frequency.
struct DyadicFreqInterval {
  int k = 0;
  std::int64_t m = 0;
  /// Lattice index of the smallest element of Sigma in omega, when any.
  std::optional<std::int64_t> representative;

  double length() const;
  double lo() const { return static_cast<double>(m) * length(); }
  double hi() const { return static_cast<double>(m + 1) * length(); }
  double center() const { return lo() + 0.5 * length(); }

  bool resolvable(const TorusGrid& grid) const;
  /// Lattice cells per tile, 2^-k P. Throws ResolutionError if below one.
  std::int64_t cells(const TorusGrid& grid) const;
  IndexInterval index_range(const TorusGrid& grid) const;
};

/// Throws ResolutionError unless 2^-k >= 1/P.
std::int64_t tile_cells(const TorusGrid& grid, int k);

/// Dyadic tiles of length 2^-k meeting Sigma, ordered by m, with representatives.
std::vector<DyadicFreqInterval> occupied_tiles(const FrequencySet& sigma, int k);

enum class DkVariant { separated, tiled };

/// Symbol of D_k.
///
/// separated: sum_j phi^(2^k (xi - xi_j)); requires Sigma to be 1-separated.
/// tiled:     sum over occupied tiles omega of phi^((xi - xi_omega) / |omega|).
SpectralSymbol build_dk_symbol(const FrequencySet& sigma, int k, DkVariant variant);

/// Adds phi^((xi - center) / width) into `symbol` over its support.
void add_phi_window(SpectralSymbol& symbol, std::int64_t center_index, double width_cells);

}  // namespace mflab

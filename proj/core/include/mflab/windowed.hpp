#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mflab/grid.hpp"
#include "mflab/symbols.hpp"

namespace mflab {

/// Windowed Fourier series of f * phi_omega.
///
/// With |I| = 1/|omega| and shift step s = |I|/4 the coefficients are
///   c_l = h sum_m f(x_m) e(-xi_omega x_m) kappa(l s - x_m),
/// kappa the inverse transform of phi^(xi/|omega|), and
///   f * phi_omega(x) = (1/4) sum_l c_l e(xi_omega x) W((x - l s)/|I|),
/// W the window whose transform is |I| (A^ * eta)(. / |omega|).
struct WindowExpansion {
  DyadicFreqInterval omega;
  std::int64_t center_index = 0;  ///< lattice index of xi_omega
  double shift_step = 0.0;        ///< s = |I| / 4
  std::size_t stride = 0;         ///< s / h samples
  std::size_t shifts = 0;         ///< L = P / s
  std::vector<cplx> coefficients; ///< c_l, l = 0..L-1 (l and l - L name the same shift)
  Signal reference;               ///< apply_multiplier(f, phi^_omega)
  Signal reconstruction;          ///< full sum over all shifts
  Signal truncated;               ///< sum over signed |l| <= truncation
  std::size_t truncation = 0;
  Signal synthesis;               ///< W sampled on the grid
  double full_error = 0.0;        ///< ||reconstruction - reference||_2 / ||f||_2
  double truncated_error = 0.0;   ///< ||truncated - reference||_2 / ||f||_2

  /// Sum over the shifts with signed |l| <= truncation.
  Signal partial(std::size_t truncation) const;
  /// ||partial(truncation) - reference||_2 / ||f||_2 given ||f||_2.
  double partial_error(std::size_t truncation, double f_norm2) const;
};

/// phi^((xi - xi_omega)/|omega|) on the lattice.
SpectralSymbol window_symbol(const TorusGrid& grid, const DyadicFreqInterval& omega);

/// xi_omega: the representative when set, otherwise the centre of omega.
/// Throws ResolutionError when it is not a lattice point.
std::int64_t window_center_index(const TorusGrid& grid, const DyadicFreqInterval& omega);

/// Throws ResolutionError unless |omega| >= 1/P and |I|/4 is a whole number of samples.
WindowExpansion windowed_expand(const Signal& f, const DyadicFreqInterval& omega, std::size_t truncation);

}  // namespace mflab

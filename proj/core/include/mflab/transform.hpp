#pragma once

#include <cstddef>
#include <cstdint>

#include "mflab/grid.hpp"

namespace mflab {

/// f^(xi_n) = h * sum_m f(x_m) e(-xi_n x_m).
///
/// Together with `inverse_transform` this is a unitary pair between
/// L2(h dx) and L2(df / P): ||f^||_2 = ||f||_2 to rounding.
Spectrum forward_transform(const Signal& f);

/// f(x_m) = (1/P) * sum_n F(xi_n) e(xi_n x_m).
Signal inverse_transform(const Spectrum& spectrum);

/// (s * f^)^v. Throws GridMismatchError when the grids differ.
Signal apply_multiplier(const Signal& f, const SpectralSymbol& symbol);

/// e(xi_n x_m) with the phase reduced exactly modulo one.
cplx lattice_exponential(const TorusGrid& grid, std::int64_t n, std::size_t m);

}  // namespace mflab

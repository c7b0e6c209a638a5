#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mflab/grid.hpp"
#include "mflab/operators.hpp"
#include "mflab/symbols.hpp"

namespace mflab::lab {

using Rng = std::mt19937_64;

enum class StrongFamily { window_gaussian, signed_exponentials, narrow_atom };
enum class WeakFamily { delta, haar_atom };

const char* to_string(StrongFamily family);
const char* to_string(WeakFamily family);

/// A generated input together with a short description of how it was drawn.
struct Input {
  Signal f;
  std::string descriptor;
};

/// Complex Gaussian spectrum supported on the union of the index windows.
Input window_gaussian(const TorusGrid& grid, const std::vector<IndexInterval>& windows, Rng& rng);

/// sum_j +-e(xi_j x) times a smooth envelope of random width.
Input signed_exponentials(const TorusGrid& grid, const std::vector<std::int64_t>& centers, Rng& rng);

/// One modulated atom at a random centre frequency with a narrow envelope.
Input narrow_atom(const TorusGrid& grid, const std::vector<std::int64_t>& centers, Rng& rng);

/// Unit-mass spike in a single random cell.
Input delta_input(const TorusGrid& grid, Rng& rng);

/// Unit-mass mean-zero dyadic atom (+ on the left half, - on the right half).
Input haar_atom(const TorusGrid& grid, Rng& rng);

Input strong_input(StrongFamily family, const TorusGrid& grid, const std::vector<IndexInterval>& windows,
                   const std::vector<std::int64_t>& centers, Rng& rng);
Input weak_input(WeakFamily family, const TorusGrid& grid, Rng& rng);

/// N distinct integer frequencies in [-Nyq/2, Nyq/2).
FrequencySet random_separated_set(const TorusGrid& grid, std::size_t N, Rng& rng);

/// N distinct non-integer lattice frequencies in (-Nyq/2, Nyq/2).
FrequencySet random_lattice_set(const TorusGrid& grid, std::size_t N, Rng& rng);

/// `count` disjoint intervals of length 1/2 inside +-0.9 Nyq with random
/// unimodular d; with `with_symbols`, each interval also carries a random
/// piecewise-constant symbol of modulus at most one.
RoughMultiplierSpec random_rough_spec(const TorusGrid& grid, std::size_t count, Rng& rng, bool with_symbols);

/// Windows of half-width u * 2^-k P / 2 around each element of sigma.
std::vector<IndexInterval> sigma_windows(const FrequencySet& sigma, int k, double u);

}  // namespace mflab::lab

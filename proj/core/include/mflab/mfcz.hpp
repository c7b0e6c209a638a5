#pragma once

#include <cstddef>
#include <vector>

#include "mflab/grid.hpp"
#include "mflab/symbols.hpp"

namespace mflab {

/// Dyadic run of spatial samples [start, start + cells), with `cells` a power
/// of two and `start` a multiple of it. Physical extent [start h, (start+cells) h).
struct SpatialInterval {
  std::size_t start = 0;
  std::size_t cells = 1;

  double length(const TorusGrid& grid) const { return static_cast<double>(cells) * grid.step(); }
  /// First sample of the concentric triple 3J, reduced modulo M.
  std::size_t triple_start(const TorusGrid& grid) const;
  std::size_t triple_cells() const { return 3 * cells; }
  bool operator==(const SpatialInterval&) const = default;
};

/// Spectral diagnostics of the exponential system on 3J.
struct GramDiagnostics {
  double min_singular = 0.0;  ///< smallest singular value of the Gram matrix
  double max_singular = 0.0;
  std::size_t rank = 0;       ///< numerical rank at the 1e-10 cutoff
  std::size_t size = 0;       ///< N
};

struct CZInterval {
  SpatialInterval J;
  std::vector<cplx> moments;  ///< <f_J, e(xi_j .)>, j = 1..N
  std::vector<cplx> f_local;  ///< f on J
  std::vector<cplx> g_local;  ///< g_J on 3J
  std::vector<cplx> b_local;  ///< b_J = f_J - g_J on 3J
  GramDiagnostics gram;

  Signal f_J(const TorusGrid& grid) const;
  Signal g_J(const TorusGrid& grid) const;
  Signal b_J(const TorusGrid& grid) const;
};

struct CZDecomposition {
  Signal f;
  double lambda = 0.0;
  FrequencySet sigma;
  Signal g;  ///< f - sum_J b_J
  std::vector<CZInterval> atoms;
};

struct CZReport {
  double lambda = 0.0;
  std::size_t N = 0;
  std::size_t atoms = 0;
  double C1 = 0.0, C2 = 0.0, C3 = 0.0, C4 = 0.0, C5 = 0.0, C6 = 0.0;
  double reconstruction_error = 0.0;  ///< max |f - g - sum b_J| / max |f|
  double worst_gram_min_singular = 0.0;
  double worst_gram_condition = 0.0;
};

/// Maximal dyadic J with (1/|J|) int_J |f| > lambda / sqrt(N), top-down.
///
/// Throws DegenerateInputError when a selected J is longer than P/4, in which
/// case 3J would wrap onto itself (this includes the whole torus).
std::vector<SpatialInterval> select_intervals(const Signal& f, double lambda, std::size_t N);

/// Least-norm element of span{e(xi_j x) 1_{3J}} with the moments of f_J.
///
/// `f_J` is a full-grid signal; only its samples on J are read.
Signal moment_match(const Signal& f_J, const FrequencySet& sigma, const SpatialInterval& J,
                    GramDiagnostics* diagnostics = nullptr);

CZDecomposition mfcz_decompose(const Signal& f, double lambda, const FrequencySet& sigma,
                               std::size_t threads = 1);

CZReport verify_mfcz(const CZDecomposition& dec);

}  // namespace mflab

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mflab {

using cplx = std::complex<double>;

/// The sampled periodic domain standing in for the real line.
///
/// The torus has length `period()` (P) and is sampled at `samples()` (M)
/// points x_m = m h, h = P / M. Frequencies live on the lattice Z / P and are
/// addressed by a signed index n in [-M/2, M/2); the physical frequency of
/// index n is n / P.
class TorusGrid {
 public:
  TorusGrid() : TorusGrid(128.0, std::size_t{1} << 15) {}
  TorusGrid(double period, std::size_t samples);

  double period() const { return period_; }
  std::size_t samples() const { return samples_; }
  double step() const { return period_ / static_cast<double>(samples_); }
  double frequency_step() const { return 1.0 / period_; }
  double nyquist() const { return static_cast<double>(samples_) / (2.0 * period_); }

  std::int64_t min_index() const { return -static_cast<std::int64_t>(samples_ / 2); }
  std::int64_t end_index() const { return static_cast<std::int64_t>(samples_ / 2); }
  bool contains_index(std::int64_t n) const { return n >= min_index() && n < end_index(); }

  double frequency(std::int64_t n) const { return static_cast<double>(n) / period_; }
  /// Lattice index of a physical frequency; throws PreconditionError off-lattice.
  std::int64_t index_of(double xi) const;
  double position(std::size_t m) const { return static_cast<double>(m) * step(); }

  /// Storage slot (FFT order) of signed frequency index n.
  std::size_t slot(std::int64_t n) const;
  /// Signed frequency index stored at FFT slot s.
  std::int64_t index_at_slot(std::size_t s) const;

  /// Spatial samples per unit length, M / P.
  double density() const { return static_cast<double>(samples_) / period_; }

  bool operator==(const TorusGrid& other) const {
    return period_ == other.period_ && samples_ == other.samples_;
  }

 private:
  double period_;
  std::size_t samples_;
};

void require_same_grid(const TorusGrid& a, const TorusGrid& b, const char* where);

/// Spatial samples of a function on the torus.
struct Signal {
  TorusGrid grid;
  std::vector<cplx> values;

  Signal() = default;
  explicit Signal(const TorusGrid& g) : grid(g), values(g.samples()) {}
  Signal(const TorusGrid& g, std::vector<cplx> v);

  double norm1() const;
  double norm2() const;
  double norm_inf() const;
};

/// Frequency-side samples. Values are held in FFT slot order; use `at(n)` for
/// signed frequency indices. Symbols of multipliers use the same type.
struct Spectrum {
  TorusGrid grid;
  std::vector<cplx> values;

  Spectrum() = default;
  explicit Spectrum(const TorusGrid& g) : grid(g), values(g.samples()) {}
  Spectrum(const TorusGrid& g, std::vector<cplx> v);

  cplx& at(std::int64_t n) { return values[grid.slot(n)]; }
  const cplx& at(std::int64_t n) const { return values[grid.slot(n)]; }

  /// (1/P) sum |F|^2, the frequency-side L2 norm.
  double norm2() const;
  double max_abs() const;
};

using SpectralSymbol = Spectrum;

/// Half-open run of consecutive lattice indices [lo, hi).
struct IndexInterval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  std::int64_t length() const { return hi - lo; }
  bool empty() const { return hi <= lo; }
  bool contains(std::int64_t n) const { return n >= lo && n < hi; }
  bool overlaps(const IndexInterval& o) const { return lo < o.hi && o.lo < hi; }
  bool operator==(const IndexInterval&) const = default;
};

double l1_norm(std::span<const cplx> values, double step);
double l2_norm(std::span<const cplx> values, double step);

}  // namespace mflab

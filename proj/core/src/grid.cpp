#include "mflab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mflab/errors.hpp"

namespace mflab {

namespace {

bool is_power_of_two(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) return false;
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);
  return mantissa == 0.5;
}

}  // namespace

TorusGrid::TorusGrid(double period, std::size_t samples)
    : period_(period), samples_(samples) {
  if (!is_power_of_two(period)) {
    throw PreconditionError("grid period must be a power of two");
  }
  if (samples < 4 || (samples & (samples - 1)) != 0) {
    throw PreconditionError("grid sample count must be a power of two >= 4");
  }
  if (static_cast<double>(samples) < 4.0 * period) {
    std::ostringstream msg;
    msg << "grid needs samples >= 4 * period (got M=" << samples << ", P=" << period << ")";
    throw PreconditionError(msg.str());
  }
}

std::int64_t TorusGrid::index_of(double xi) const {
  const double scaled = xi * period_;
  const double rounded = std::round(scaled);
  if (std::abs(scaled - rounded) > 1e-9 * std::max(1.0, std::abs(scaled))) {
    std::ostringstream msg;
    msg << "frequency " << xi << " is not on the lattice Z/" << period_;
    throw PreconditionError(msg.str());
  }
  return static_cast<std::int64_t>(rounded);
}

std::size_t TorusGrid::slot(std::int64_t n) const {
  const auto m = static_cast<std::int64_t>(samples_);
  std::int64_t r = n % m;
  if (r < 0) r += m;
  return static_cast<std::size_t>(r);
}

std::int64_t TorusGrid::index_at_slot(std::size_t s) const {
  const auto signed_s = static_cast<std::int64_t>(s);
  return signed_s >= end_index() ? signed_s - static_cast<std::int64_t>(samples_) : signed_s;
}

void require_same_grid(const TorusGrid& a, const TorusGrid& b, const char* where) {
  if (!(a == b)) {
    throw GridMismatchError(std::string(where) + ": grids differ");
  }
}

Signal::Signal(const TorusGrid& g, std::vector<cplx> v) : grid(g), values(std::move(v)) {
  if (values.size() != grid.samples()) {
    throw GridMismatchError("signal length does not match grid sample count");
  }
}

double Signal::norm1() const { return l1_norm(values, grid.step()); }
double Signal::norm2() const { return l2_norm(values, grid.step()); }
double Signal::norm_inf() const {
  double best = 0.0;
  for (const auto& v : values) best = std::max(best, std::abs(v));
  return best;
}

Spectrum::Spectrum(const TorusGrid& g, std::vector<cplx> v) : grid(g), values(std::move(v)) {
  if (values.size() != grid.samples()) {
    throw GridMismatchError("spectrum length does not match grid sample count");
  }
}

double Spectrum::norm2() const { return l2_norm(values, grid.frequency_step()); }
double Spectrum::max_abs() const {
  double best = 0.0;
  for (const auto& v : values) best = std::max(best, std::abs(v));
  return best;
}

double l1_norm(std::span<const cplx> values, double step) {
  double sum = 0.0;
  for (const auto& v : values) sum += std::abs(v);
  return sum * step;
}

double l2_norm(std::span<const cplx> values, double step) {
  double sum = 0.0;
  for (const auto& v : values) sum += std::norm(v);
  return std::sqrt(sum * step);
}

}  // namespace mflab

#include "mflab/windowed.hpp"

#include <cmath>
#include <sstream>

#include "mflab/bump.hpp"
#include "mflab/errors.hpp"
#include "mflab/transform.hpp"

namespace mflab {

namespace {

constexpr std::size_t kOversampling = 4;

double relative_l2(const Signal& a, const Signal& b, double scale) {
  double sum = 0.0;
  for (std::size_t m = 0; m < a.values.size(); ++m) sum += std::norm(a.values[m] - b.values[m]);
  const double diff = std::sqrt(a.grid.step() * sum);
  return scale > 0.0 ? diff / scale : diff;
}

}  // namespace

Signal WindowExpansion::partial(std::size_t limit) const {
  const TorusGrid& grid = synthesis.grid;
  const std::size_t M = grid.samples();
  std::vector<cplx> sum(M, cplx{});
  for (std::size_t l = 0; l < shifts; ++l) {
    if (std::min(l, shifts - l) > limit) continue;
    const cplx c = shift_step * coefficients[l];
    const std::size_t at = l * stride;
    for (std::size_t m = 0; m < M; ++m) sum[m] += c * synthesis.values[(m + M - at) % M];
  }
  for (std::size_t m = 0; m < M; ++m) sum[m] *= lattice_exponential(grid, center_index, m);
  return Signal(grid, std::move(sum));
}

double WindowExpansion::partial_error(std::size_t limit, double f_norm2) const {
  return relative_l2(partial(limit), reference, f_norm2);
}

std::int64_t window_center_index(const TorusGrid& grid, const DyadicFreqInterval& omega) {
  if (omega.representative) return *omega.representative;
  const double index = omega.center() * grid.period();
  if (index != std::floor(index)) {
    throw ResolutionError("window centre is not a lattice frequency; |omega| must be at least 2/P");
  }
  return static_cast<std::int64_t>(index);
}

SpectralSymbol window_symbol(const TorusGrid& grid, const DyadicFreqInterval& omega) {
  SpectralSymbol symbol(grid);
  add_phi_window(symbol, window_center_index(grid, omega), static_cast<double>(omega.cells(grid)));
  return symbol;
}

WindowExpansion windowed_expand(const Signal& f, const DyadicFreqInterval& omega, std::size_t truncation) {
  const TorusGrid& grid = f.grid;
  if (f.values.size() != grid.samples()) throw GridMismatchError("windowed_expand: signal length does not match grid");
  const std::int64_t cells = omega.cells(grid);  // throws when |omega| < 1/P
  const std::size_t M = grid.samples();
  // |I| / 4 in samples: M / (4 P |omega|) = M / (4 cells)
  if (M % (kOversampling * static_cast<std::size_t>(cells)) != 0) {
    std::ostringstream msg;
    msg << "windowed_expand: shift step |I|/4 is below one sample at |omega| = " << omega.length();
    throw ResolutionError(msg.str());
  }

  WindowExpansion out;
  out.omega = omega;
  out.center_index = window_center_index(grid, omega);
  out.stride = M / (kOversampling * static_cast<std::size_t>(cells));
  out.shifts = M / out.stride;
  out.shift_step = static_cast<double>(out.stride) * grid.step();
  out.truncation = truncation;

  const SpectralSymbol symbol = window_symbol(grid, omega);
  out.reference = apply_multiplier(f, symbol);

  // kappa: baseband analysis window
  SpectralSymbol kappa_hat(grid);
  add_phi_window(kappa_hat, 0, static_cast<double>(cells));
  const Signal kappa = inverse_transform(kappa_hat);

  // W: synthesis window with transform (A^ * eta)(xi / |omega|), eta weights summing to one
  const auto width = static_cast<double>(cells);
  const BumpShape a_shape = bump_shape(BumpKind::A);
  const BumpShape e_shape = bump_shape(BumpKind::eta);
  const auto eta_reach = static_cast<std::int64_t>(std::floor(e_shape.support * width));
  std::vector<double> eta(static_cast<std::size_t>(2 * eta_reach + 1));
  double eta_total = 0.0;
  for (std::int64_t n = -eta_reach; n <= eta_reach; ++n) {
    const double v = bump_profile(BumpKind::eta, static_cast<double>(n) / width);
    eta[static_cast<std::size_t>(n + eta_reach)] = v;
    eta_total += v;
  }
  for (auto& v : eta) v /= eta_total;
  const auto w_reach = static_cast<std::int64_t>(std::ceil((a_shape.support + e_shape.support) * width)) + 1;
  if (w_reach >= grid.end_index()) throw ResolutionError("windowed_expand: synthesis window exceeds the band");
  SpectralSymbol w_hat(grid);
  for (std::int64_t n = -w_reach; n <= w_reach; ++n) {
    double acc = 0.0;
    for (std::int64_t t = -eta_reach; t <= eta_reach; ++t) {
      acc += eta[static_cast<std::size_t>(t + eta_reach)] * bump_profile(BumpKind::A, static_cast<double>(n - t) / width);
    }
    w_hat.at(n) = acc;
  }
  const Signal window = inverse_transform(w_hat);

  // demodulated input
  std::vector<cplx> demod(M);
  for (std::size_t m = 0; m < M; ++m) demod[m] = f.values[m] * std::conj(lattice_exponential(grid, out.center_index, m));

  const double h = grid.step();
  out.coefficients.assign(out.shifts, cplx{});
  for (std::size_t l = 0; l < out.shifts; ++l) {
    const std::size_t at = l * out.stride;
    cplx acc{};
    for (std::size_t m = 0; m < M; ++m) acc += demod[m] * kappa.values[(at + M - m) % M];
    out.coefficients[l] = h * acc;
  }

  out.synthesis = window;
  out.reconstruction = out.partial(out.shifts);
  out.truncated = out.partial(truncation);

  const double scale = f.norm2();
  out.full_error = relative_l2(out.reconstruction, out.reference, scale);
  out.truncated_error = relative_l2(out.truncated, out.reference, scale);
  return out;
}

}  // namespace mflab

#include "mflab/transform.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <numbers>
#include <vector>

#include "mflab/errors.hpp"

namespace mflab {

namespace {

// FFTW's planner is not thread-safe; execution of an existing plan on new
// arrays is. Plans are created once per (size, direction) and kept for the
// lifetime of the process.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(std::size_t n, int sign) {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto key = std::make_pair(n, sign);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    std::vector<cplx> in(n), out(n);
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), reinterpret_cast<fftw_complex*>(in.data()),
                                      reinterpret_cast<fftw_complex*>(out.data()), sign,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (plan == nullptr) throw Error("fftw failed to create a plan");
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

void execute(std::vector<cplx>& in, std::vector<cplx>& out, int sign) {
  fftw_plan plan = plan_cache().get(in.size(), sign);
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
}

}  // namespace

Spectrum forward_transform(const Signal& f) {
  const TorusGrid& grid = f.grid;
  if (f.values.size() != grid.samples()) {
    throw GridMismatchError("forward_transform: signal length does not match grid");
  }
  std::vector<cplx> in = f.values;
  std::vector<cplx> out(grid.samples());
  execute(in, out, FFTW_FORWARD);
  const double h = grid.step();
  for (auto& v : out) v *= h;
  return Spectrum(grid, std::move(out));
}

Signal inverse_transform(const Spectrum& spectrum) {
  const TorusGrid& grid = spectrum.grid;
  if (spectrum.values.size() != grid.samples()) {
    throw GridMismatchError("inverse_transform: spectrum length does not match grid");
  }
  std::vector<cplx> in = spectrum.values;
  std::vector<cplx> out(grid.samples());
  execute(in, out, FFTW_BACKWARD);
  const double scale = 1.0 / grid.period();
  for (auto& v : out) v *= scale;
  return Signal(grid, std::move(out));
}

Signal apply_multiplier(const Signal& f, const SpectralSymbol& symbol) {
  require_same_grid(f.grid, symbol.grid, "apply_multiplier");
  Spectrum spectrum = forward_transform(f);
  for (std::size_t i = 0; i < spectrum.values.size(); ++i) spectrum.values[i] *= symbol.values[i];
  return inverse_transform(spectrum);
}

cplx lattice_exponential(const TorusGrid& grid, std::int64_t n, std::size_t m) {
  const auto size = static_cast<std::int64_t>(grid.samples());
  std::int64_t r = (n % size) * static_cast<std::int64_t>(m % grid.samples()) % size;
  if (r < 0) r += size;
  const double phase = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(size);
  return {std::cos(phase), std::sin(phase)};
}

}  // namespace mflab

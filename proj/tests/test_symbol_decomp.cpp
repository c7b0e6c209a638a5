#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "mflab/errors.hpp"
#include "mflab/io.hpp"
#include "mflab/layers.hpp"
#include "mflab/transform.hpp"
#include "mflab/variation.hpp"
#include "mflab/whitney.hpp"
#include "mflab/windowed.hpp"
#include "support/oracles.hpp"

using namespace mflab;

namespace {

struct LayerCheck {
  bool disjoint = true;
  bool counts = true;
  bool coefficients = true;
  double reconstruction = 0.0;  ///< max |g - sum of pieces| / v
};

/// Scans a layered symbol against its source with independent arithmetic.
LayerCheck check_layers(const SpectralSymbol& g, const LayeredSymbol& ls) {
  LayerCheck out;
  std::vector<cplx> sum(g.values.size());
  for (std::size_t j = 0; j < ls.layers.size(); ++j) {
    const auto& layer = ls.layers[j];
    if (static_cast<double>(layer.size()) > std::ldexp(2.0, static_cast<int>(j)) + 2.0) out.counts = false;
    const double cap = 3.0 * std::pow(2.0, -static_cast<double>(j) / ls.r) * ls.v;
    for (std::size_t i = 0; i < layer.size(); ++i) {
      if (std::abs(layer[i].d) > cap * (1.0 + 1e-12)) out.coefficients = false;
      if (i > 0 && layer[i - 1].interval.hi > layer[i].interval.lo) out.disjoint = false;
      for (std::int64_t n = layer[i].interval.lo; n < layer[i].interval.hi; ++n) sum[g.grid.slot(n)] += layer[i].d;
    }
  }
  for (std::size_t s = 0; s < sum.size(); ++s) out.reconstruction = std::max(out.reconstruction, std::abs(g.values[s] - sum[s]));
  if (ls.v > 0.0) out.reconstruction /= ls.v;
  return out;
}

SpectralSymbol random_steps(const TorusGrid& grid, std::mt19937_64& rng, int jumps, bool monotone, IndexInterval w) {
  std::uniform_int_distribution<std::int64_t> cut(w.lo + 1, w.hi - 1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::int64_t> cuts;
  for (int i = 0; i < jumps; ++i) cuts.push_back(cut(rng));
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(w.hi);
  SpectralSymbol g(grid);
  std::int64_t at = w.lo;
  double level = 0.0;
  for (auto c : cuts) {
    level = monotone ? level + u(rng) : u(rng);
    const cplx value = monotone ? cplx{level, 0.0} : level * oracle::unit_phase(u(rng));
    for (; at < c; ++at) g.at(at) = value;
  }
  return g;
}

std::vector<WhitneySystem> whitney_corpus(const TorusGrid& grid, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<WhitneySystem> out;
  const std::int64_t M = static_cast<std::int64_t>(grid.samples());
  for (std::size_t i = 0; i < count; ++i) {
    const std::int64_t len = std::int64_t{4096} + std::uniform_int_distribution<std::int64_t>(0, M - 4096 - 2)(rng);
    const std::int64_t lo = std::uniform_int_distribution<std::int64_t>(-M / 2, M / 2 - len)(rng);
    out.push_back(whitney_decompose(grid, {lo, lo + len}));
  }
  return out;
}

std::size_t oracle_overlap(const WhitneySystem& sys, double factor) {
  std::size_t best = 0;
  for (const auto& p : sys.pieces) {
    const double e = p.dilate(factor).first;
    std::size_t depth = 0;
    for (const auto& q : sys.pieces) {
      const auto [a, b] = q.dilate(factor);
      if (a <= e && e < b) ++depth;
    }
    best = std::max(best, depth);
  }
  return best;
}

Signal band_limited(const TorusGrid& grid, std::int64_t lo, std::int64_t hi, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Spectrum F(grid);
  for (std::int64_t n = lo; n < hi; ++n) F.at(n) = {g(rng), g(rng)};
  return inverse_transform(F);
}

double rel_l2(const Signal& a, const Signal& b, double ref) {
  double s = 0.0;
  for (std::size_t m = 0; m < a.values.size(); ++m) s += std::norm(a.values[m] - b.values[m]);
  return std::sqrt(a.grid.step() * s) / ref;
}

}  // namespace

TEST_CASE("constant symbol is one layer-zero piece") {
  const TorusGrid grid(16.0, 256);
  SpectralSymbol g(grid);
  for (auto& v : g.values) v = cplx{0.5, -0.25};
  const LayeredSymbol ls = vr_layer_decompose(g, {-40, 40}, 2.0, 1e-6);
  REQUIRE(ls.layers.size() >= 1);
  REQUIRE(ls.layers[0].size() == 1);
  CHECK(ls.layers[0][0].interval == IndexInterval{-40, 40});
  CHECK(ls.layers[0][0].d == cplx{0.5, -0.25});
  for (std::size_t j = 1; j < ls.layers.size(); ++j) CHECK(ls.layers[j].empty());
  for (std::int64_t n = -40; n < 40; ++n) CHECK(ls.remainder.at(n) == cplx{});
}

TEST_CASE("indicator symbol on its own window is one layer-zero piece") {
  const TorusGrid grid(16.0, 256);
  SpectralSymbol g(grid);
  for (std::int64_t n = 5; n < 20; ++n) g.at(n) = 1.0;
  const LayeredSymbol ls = vr_layer_decompose(g, {5, 20}, 2.0, 1e-6);
  REQUIRE(ls.layers[0].size() == 1);
  CHECK(ls.layers[0][0].interval == IndexInterval{5, 20});
  CHECK(ls.layers[0][0].d == cplx{1.0, 0.0});
  CHECK(std::abs(ls.layers[0][0].d) <= 3.0 * ls.v);
}

TEST_CASE("indicator symbol with its zero neighbours") {
  const TorusGrid grid(16.0, 256);
  SpectralSymbol g(grid);
  for (std::int64_t n = 5; n < 20; ++n) g.at(n) = 1.0;
  const LayeredSymbol ls = vr_layer_decompose(g, 2.0, 1e-6);
  CHECK(ls.window == IndexInterval{4, 21});
  CHECK(ls.v == doctest::Approx(1.0 + std::sqrt(2.0)));
  // the unit jump first shows up at the first level whose threshold is below one
  int first = -1;
  for (int j = 0; j <= ls.j_max && first < 0; ++j) {
    if (ls.threshold(j) < 1.0) first = j;
  }
  REQUIRE(first == 3);
  for (int j = 0; j < first; ++j) {
    for (const auto& p : ls.layers[static_cast<std::size_t>(j)]) CHECK(p.d == cplx{});
  }
  bool found = false;
  for (const auto& p : ls.layers[static_cast<std::size_t>(first)]) {
    if (p.d == cplx{1.0, 0.0} && p.interval == IndexInterval{5, 20}) found = true;
  }
  CHECK(found);
  const LayerCheck c = check_layers(g, ls);
  CHECK(c.coefficients);
  CHECK(c.reconstruction <= 1e-6);
}

TEST_CASE("zero symbol gives a single zero layer") {
  const TorusGrid grid(16.0, 256);
  const LayeredSymbol ls = vr_layer_decompose(SpectralSymbol(grid), 2.0, 1e-3);
  CHECK(ls.v == 0.0);
  REQUIRE(ls.layers.size() == 1);
  REQUIRE(ls.layers[0].size() == 1);
  CHECK(ls.layers[0][0].d == cplx{});
}

TEST_CASE("layer parameters are validated") {
  const TorusGrid grid(16.0, 256);
  SpectralSymbol g(grid);
  g.at(3) = 1.0;
  CHECK_THROWS_AS(vr_layer_decompose(g, 0.5, 1e-3), DomainError);
  CHECK_THROWS_AS(vr_layer_decompose(g, 2.0, 0.0), DomainError);
  CHECK_THROWS_AS(vr_layer_decompose(g, 2.0, 1.0), DomainError);
}

TEST_CASE("monotone twelve-jump step symbol") {
  const TorusGrid grid(32.0, 1024);
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    const SpectralSymbol g = random_steps(grid, rng, 12, true, {-100, 150});
    for (double r : {1.0, 1.5, 2.0, 4.0}) {
      const double tol = 1e-4;
      const LayeredSymbol ls = vr_layer_decompose(g, r, tol);
      CHECK(ls.v == doctest::Approx(symbol_vr_norm(g, ls.window, r)));
      CHECK(ls.threshold(ls.j_max) <= tol * ls.v);
      const LayerCheck c = check_layers(g, ls);
      CHECK(c.disjoint);
      CHECK(c.counts);
      CHECK(c.coefficients);
      CHECK(c.reconstruction <= tol);
      const SpectralSymbol back = ls.reconstruct();
      for (std::size_t s = 0; s < g.values.size(); ++s) CHECK(std::abs(back.values[s] - g.values[s]) <= 1e-12);
    }
  }
}

TEST_CASE("layer contract on rough and smooth symbols") {
  const TorusGrid grid(32.0, 2048);
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 20; ++trial) {
    SpectralSymbol g = random_steps(grid, rng, 1 + trial, false, {-300, 200});
    for (std::int64_t n = -300; n < 200; ++n) g.at(n) += 0.3 * std::sin(0.05 * static_cast<double>(n) * (1 + trial % 3));
    const LayeredSymbol ls = vr_layer_decompose(g, 1.0 + 0.25 * (trial % 6), 1e-5);
    const LayerCheck c = check_layers(g, ls);
    CHECK(c.disjoint);
    CHECK(c.counts);
    CHECK(c.coefficients);
    CHECK(c.reconstruction <= 1e-5);
  }
}

TEST_CASE("layer CSV lists every piece") {
  const TorusGrid grid(16.0, 256);
  std::mt19937_64 rng(53);
  const SpectralSymbol g = random_steps(grid, rng, 4, false, {-20, 20});
  const LayeredSymbol ls = vr_layer_decompose(g, 2.0, 1e-3);
  std::size_t pieces = 0;
  for (const auto& l : ls.layers) pieces += l.size();
  std::ostringstream csv;
  write_layers_csv(csv, ls);
  const std::string text = csv.str();
  CHECK(text.rfind("j,interval_lo,interval_hi,re_d,im_d\n", 0) == 0);
  CHECK(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) == pieces + 1);
}

TEST_CASE("whitney needs 4096 cells") {
  const TorusGrid grid;
  CHECK_THROWS_AS(whitney_decompose(grid, {0, 4095}), ResolutionError);
  CHECK_NOTHROW(whitney_decompose(grid, {0, 4096}));
}

TEST_CASE("full band of 2^14 cells has a large central piece") {
  const TorusGrid grid(128.0, std::size_t{1} << 14);
  const WhitneySystem sys = whitney_decompose(grid, {-8192, 8192});
  for (const auto& p : sys.pieces) {
    if (p.u.contains(0) || p.u.contains(-1)) CHECK(p.cells() >= 128);
  }
}

TEST_CASE("whitney pieces partition omega and satisfy the dilation rule") {
  const TorusGrid grid;
  for (const auto& sys : whitney_corpus(grid, 50, 54)) {
    std::int64_t at = sys.omega.lo;
    std::map<std::int64_t, std::size_t> scales;
    for (const auto& p : sys.pieces) {
      CHECK(p.u.lo == at);
      at = p.u.hi;
      const std::int64_t L = p.cells();
      CHECK((L & (L - 1)) == 0);
      CHECK(((p.u.lo % L) + L) % L == 0);
      ++scales[L];
      const auto [a, b] = p.dilate(100.0);
      if (p.flagged) CHECK(L <= sys.min_cells);
      else CHECK((a >= static_cast<double>(sys.omega.lo) && b <= static_cast<double>(sys.omega.hi)));
    }
    CHECK(at == sys.omega.hi);
    CHECK(scales == sys.per_scale);
    CHECK(sys.overlap_K == oracle_overlap(sys, 20.0));
    CHECK(sys.overlap_K <= 32);
  }
}

TEST_CASE("overlap constant does not grow with omega") {
  const TorusGrid grid;
  std::size_t smallest = 0, largest = 0;
  for (std::int64_t len : {4096, 8192, 16384, 32766}) {
    const WhitneySystem sys = whitney_decompose(grid, {-len / 2, len - len / 2});
    if (len == 4096) smallest = sys.overlap_K;
    largest = std::max(largest, sys.overlap_K);
  }
  CHECK(largest <= smallest + 2);
}

TEST_CASE("overlap constant of at most eight" * doctest::should_fail()) {
  const TorusGrid grid;
  for (const auto& sys : whitney_corpus(grid, 50, 55)) CHECK(sys.overlap_K <= 8);
}

TEST_CASE("window system partition of unity and window shapes") {
  const TorusGrid grid;
  for (const auto& skeleton : whitney_corpus(grid, 6, 56)) {
    const WhitneySystem sys = window_system(skeleton);
    REQUIRE(sys.has_windows());
    const IndexInterval probe{std::max(grid.min_index(), sys.omega.lo - 50), std::min(grid.end_index(), sys.omega.hi + 50)};
    const auto sum = sys.partition_sum(probe);
    double err = 0.0;
    for (std::int64_t n = probe.lo; n < probe.hi; ++n) {
      const double want = sys.omega.contains(n) ? 1.0 : 0.0;
      err = std::max(err, std::abs(sum[static_cast<std::size_t>(n - probe.lo)] - want));
    }
    CHECK(err <= 1e-15);
    for (std::size_t i = 0; i < sys.pieces.size(); ++i) {
      const auto& p = sys.pieces[i];
      const auto& w = sys.windows[i];
      const auto [e0, e1] = p.envelope();
      for (std::int64_t n = w.phi.first; n < w.phi.end(); ++n) {
        const double x = static_cast<double>(n) + 0.5;
        if (w.phi.at(n) != 0.0) {
          CHECK(sys.omega.contains(n));
          CHECK((x >= e0 && x <= e1));
        }
        CHECK(w.phi.at(n) >= -1e-15);
      }
      const auto [a0, a1] = p.dilate(10.0);
      const auto [b0, b1] = p.dilate(15.0);
      for (std::int64_t n = w.A.first; n < w.A.end(); ++n) {
        const double x = static_cast<double>(n) + 0.5;
        if (x >= a0 && x <= a1) CHECK(w.A.at(n) == 1.0);
        if (x >= b1 || x <= b0) CHECK(w.A.at(n) == 0.0);
      }
      double mass = 0.0;
      for (double v : w.eta.values) mass += v / grid.period();
      CHECK(mass == doctest::Approx(1.0).epsilon(1e-13));
    }
    CHECK(sys.C2 <= 500.0);
  }
}

TEST_CASE("eta is a delta below resolution and a bump above") {
  const TorusGrid grid(128.0, std::size_t{1} << 15);
  const WhitneySystem sys = window_system(whitney_decompose(grid, {-16384, 16384}));
  bool any_degenerate = false;
  for (const auto& w : sys.windows) {
    if (w.eta_degenerate) {
      any_degenerate = true;
      CHECK(w.eta.values.size() == 1);
      CHECK(w.eta.values[0] == grid.period());
    }
  }
  CHECK(any_degenerate);
  std::ostringstream csv;
  write_whitney_csv(csv, sys);
  const std::string text = csv.str();
  CHECK(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) == sys.pieces.size() + 1);
}

TEST_CASE("window symbol is the dilated phi") {
  const TorusGrid grid(64.0, 8192);
  const DyadicFreqInterval omega{2, 5, std::nullopt};
  const SpectralSymbol s = window_symbol(grid, omega);
  const double c = omega.center();
  for (std::int64_t n = grid.min_index(); n < grid.end_index(); ++n) {
    CHECK(s.at(n).real() == doctest::Approx(oracle::bump((grid.frequency(n) - c) / omega.length(), 0.25, 0.5)).epsilon(1e-15));
  }
  CHECK_THROWS_AS(window_center_index(grid, DyadicFreqInterval{6, 3, std::nullopt}), ResolutionError);
}

TEST_CASE("spectrally disjoint input reconstructs to zero") {
  const TorusGrid grid(64.0, 8192);
  std::mt19937_64 rng(57);
  const DyadicFreqInterval omega{1, 4, std::nullopt};
  const Signal f = band_limited(grid, -600, -400, rng);
  const WindowExpansion ex = windowed_expand(f, omega, 8);
  CHECK(ex.reference.norm2() <= 1e-13 * f.norm2());
  CHECK(ex.reconstruction.norm2() <= 1e-12 * f.norm2());
}

TEST_CASE("full windowed sum equals the multiplier") {
  const TorusGrid grid(64.0, 8192);
  std::mt19937_64 rng(58);
  for (int trial = 0; trial < 8; ++trial) {
    const int k = trial % 3;
    const std::int64_t cells = tile_cells(grid, k);
    const std::int64_t m = trial - 4;
    const DyadicFreqInterval omega{k, m, std::nullopt};
    const IndexInterval band = omega.index_range(grid);
    const Signal f = band_limited(grid, band.lo - cells, band.hi + cells, rng);
    const WindowExpansion ex = windowed_expand(f, omega, 4);
    SpectralSymbol s(grid);
    for (std::int64_t n = grid.min_index(); n < grid.end_index(); ++n) {
      s.at(n) = oracle::bump((grid.frequency(n) - omega.center()) / omega.length(), 0.25, 0.5);
    }
    const Signal direct = apply_multiplier(f, s);
    CHECK(rel_l2(ex.reconstruction, direct, f.norm2()) <= 1e-8);
    CHECK(ex.full_error <= 1e-8);
    CHECK(ex.partial_error(ex.shifts, f.norm2()) == doctest::Approx(ex.full_error).epsilon(1e-6).scale(1e-12));
  }
}

TEST_CASE("truncation error decreases with the number of shifts") {
  const TorusGrid grid(64.0, 8192);
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const DyadicFreqInterval omega{trial % 3, trial - 5, std::nullopt};
    const std::int64_t c = window_center_index(grid, omega);
    Signal f(grid);
    for (std::size_t s = 0; s < grid.samples(); ++s) {
      double x = grid.position(s);
      x -= grid.period() * std::round(x / grid.period());
      f.values[s] = oracle::bump(x / (1.0 + u(rng)), 0.25, 0.5) * lattice_exponential(grid, c + 3, s);
    }
    const WindowExpansion ex = windowed_expand(f, omega, 0);
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t L : {1, 2, 4, 8, 16, 32, 64}) {
      const double e = ex.partial_error(L, f.norm2());
      CHECK(e <= prev * (1.0 + 1e-6) + 1e-12);
      prev = e;
    }
  }
}

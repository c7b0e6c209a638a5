#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "mflab/errors.hpp"
#include "mflab/io.hpp"
#include "mflab/mfcz.hpp"
#include "support/oracles.hpp"

using namespace mflab;

namespace {

const TorusGrid kGrid(16.0, 256);

Signal indicator(const TorusGrid& grid, double a, double b) {
  Signal f(grid);
  for (std::size_t m = 0; m < grid.samples(); ++m) {
    const double x = grid.position(m);
    if (x >= a && x < b) f.values[m] = 1.0;
  }
  return f;
}

/// Sum of a few random complex boxes, normalized to unit L1 mass.
Signal random_signal(const TorusGrid& grid, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::normal_distribution<double> g;
  Signal f(grid);
  const int parts = 1 + static_cast<int>(u(rng) * 4);
  for (int p = 0; p < parts; ++p) {
    const double a = grid.period() * (0.25 + 0.5 * u(rng));
    const double w = grid.step() * std::pow(2.0, 8.0 * u(rng));
    const cplx amp{g(rng), g(rng)};
    for (std::size_t m = 0; m < grid.samples(); ++m) {
      const double x = grid.position(m);
      if (x >= a && x < a + w) f.values[m] += amp * (1.0 + 0.5 * std::sin(7.0 * x));
    }
  }
  const double mass = f.norm1();
  for (auto& v : f.values) v /= mass;
  return f;
}

FrequencySet random_separated(const TorusGrid& grid, std::size_t N, std::mt19937_64& rng) {
  std::set<std::int64_t> picks;
  const auto P = static_cast<std::int64_t>(grid.period());
  const auto top = static_cast<std::int64_t>(grid.nyquist()) / 2;
  std::uniform_int_distribution<std::int64_t> d(-top, top - 1);
  while (picks.size() < N) picks.insert(d(rng) * P);
  return FrequencySet::from_indices(grid, {picks.begin(), picks.end()});
}

cplx moment(const TorusGrid& grid, const Signal& f, std::int64_t n) {
  cplx acc{};
  const auto M = static_cast<std::int64_t>(grid.samples());
  for (std::int64_t m = 0; m < M; ++m) {
    acc += f.values[static_cast<std::size_t>(m)] * oracle::unit_phase(-static_cast<double>((n * m) % M) / M);
  }
  return grid.step() * acc;
}

/// All dyadic intervals with average above t whose every dyadic ancestor is at or below t.
std::vector<std::pair<std::size_t, std::size_t>> dyadic_oracle(const Signal& f, double t) {
  const std::size_t M = f.values.size();
  auto avg = [&](std::size_t start, std::size_t cells) {
    double s = 0.0;
    for (std::size_t i = start; i < start + cells; ++i) s += std::abs(f.values[i]);
    return s / static_cast<double>(cells);
  };
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t cells = M; cells >= 1; cells /= 2) {
    for (std::size_t start = 0; start < M; start += cells) {
      if (!(avg(start, cells) > t)) continue;
      bool maximal = true;
      for (std::size_t c = cells * 2; c <= M; c *= 2) {
        if (avg(start / c * c, c) > t) maximal = false;
      }
      if (maximal) out.emplace_back(start, cells);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("small signals select nothing") {
  Signal f(kGrid);
  for (auto& v : f.values) v = 0.4;
  CHECK(select_intervals(f, 1.0, 4).empty());
  const CZDecomposition dec = mfcz_decompose(f, 1.0, FrequencySet::from_indices(kGrid, {0, 16}));
  CHECK(dec.atoms.empty());
  CHECK(dec.g.values == f.values);
}

TEST_CASE("unit interval indicator selects exactly itself") {
  const auto J = select_intervals(indicator(kGrid, 0.0, 1.0), 1.0, 4);
  REQUIRE(J.size() == 1);
  CHECK(J[0].start == 0);
  CHECK(J[0].length(kGrid) == doctest::Approx(1.0));
}

TEST_CASE("selection equals the dyadic-average oracle") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const Signal f = random_signal(kGrid, rng);
    const std::size_t N = std::size_t{1} << (trial % 5);
    const double lambda = std::sqrt(static_cast<double>(N)) * (4.0 / kGrid.period()) * std::pow(2.0, trial % 4);
    const auto got = select_intervals(f, lambda, N);
    std::vector<std::pair<std::size_t, std::size_t>> mine;
    for (const auto& J : got) mine.emplace_back(J.start, J.cells);
    CHECK(mine == dyadic_oracle(f, lambda / std::sqrt(static_cast<double>(N))));
    for (const auto& J : got) {
      double s = 0.0;
      for (std::size_t i = J.start; i < J.start + J.cells; ++i) s += std::abs(f.values[i]);
      if (J.cells > 1) CHECK(s / static_cast<double>(J.cells) <= 2.0 * lambda / std::sqrt(static_cast<double>(N)));
    }
  }
}

TEST_CASE("mass above the degenerate level throws") {
  Signal f(kGrid);
  for (auto& v : f.values) v = 1.0;
  CHECK_THROWS_AS(select_intervals(f, 1.0, 4), DegenerateInputError);
  CHECK_THROWS_AS(select_intervals(indicator(kGrid, 0.0, 8.0), 1.0, 4), DegenerateInputError);
  CHECK_THROWS_AS(select_intervals(f, 0.0, 4), PreconditionError);
}

TEST_CASE("single zero frequency matches the mean with a constant") {
  const FrequencySet sigma = FrequencySet::from_indices(kGrid, {0});
  const SpatialInterval J{32, 16};
  const Signal fJ = indicator(kGrid, 2.0, 3.0);
  const Signal g = moment_match(fJ, sigma, J);
  const std::size_t start = J.triple_start(kGrid);
  CHECK(start == 16);
  for (std::size_t m = 0; m < kGrid.samples(); ++m) {
    const bool inside = m >= start && m < start + 48;
    CHECK(std::abs(g.values[m] - cplx{inside ? 1.0 / 3.0 : 0.0}) <= 1e-14);
  }
}

TEST_CASE("zero moments give a zero match") {
  const FrequencySet sigma = FrequencySet::from_indices(kGrid, {0, 16, 48});
  CHECK(moment_match(Signal(kGrid), sigma, SpatialInterval{64, 16}).norm_inf() == 0.0);
}

TEST_CASE("moment residuals vanish and the match is least-norm") {
  std::mt19937_64 rng(42);
  const TorusGrid grid;
  for (int trial = 0; trial < 5; ++trial) {
    const FrequencySet sigma = random_separated(grid, 8, rng);
    const SpatialInterval J{static_cast<std::size_t>(trial + 3) * 512, 512};
    Signal fJ(grid);
    std::normal_distribution<double> g;
    for (std::size_t m = J.start; m < J.start + J.cells; ++m) fJ.values[m] = {g(rng), g(rng)};
    GramDiagnostics diag;
    const Signal gJ = moment_match(fJ, sigma, J, &diag);
    CHECK(diag.rank == 8);
    Signal b = fJ;
    for (std::size_t m = 0; m < grid.samples(); ++m) b.values[m] -= gJ.values[m];
    for (auto n : sigma.indices()) CHECK(std::abs(moment(grid, b, n)) <= 1e-8 * fJ.norm1());
    CHECK(gJ.norm2() <= fJ.norm2());
    const std::size_t s = J.triple_start(grid);
    for (std::size_t m = 0; m < grid.samples(); ++m) {
      if (m < s || m >= s + 3 * J.cells) CHECK(gJ.values[m] == cplx{});
    }
  }
}

TEST_CASE("unit interval with four integer frequencies") {
  const FrequencySet sigma = FrequencySet::from_indices(kGrid, {0, 16, 32, 48});
  const Signal f = indicator(kGrid, 0.0, 1.0);
  const CZDecomposition dec = mfcz_decompose(f, 1.0, sigma);
  REQUIRE(dec.atoms.size() == 1);
  CHECK(dec.atoms[0].J == SpatialInterval{0, 16});
  const Signal b = dec.atoms[0].b_J(kGrid);
  for (auto n : sigma.indices()) CHECK(std::abs(moment(kGrid, b, n)) <= 1e-12);
  const std::size_t s = dec.atoms[0].J.triple_start(kGrid);
  CHECK(s == kGrid.samples() - 16);
  for (std::size_t m = 0; m < kGrid.samples(); ++m) {
    const bool inside = m >= s || m < 32;
    if (!inside) CHECK(b.values[m] == cplx{});
  }
}

TEST_CASE("decomposition contract on a random corpus") {
  std::mt19937_64 rng(43);
  const TorusGrid grid(64.0, 8192);
  for (int trial = 0; trial < 24; ++trial) {
    const std::size_t N = std::size_t{2} << (trial % 4);
    const Signal f = random_signal(grid, rng);
    const FrequencySet sigma = random_separated(grid, N, rng);
    const double lambda = std::sqrt(static_cast<double>(N)) * (4.0 / grid.period()) * std::pow(2.0, trial % 3);
    const CZDecomposition dec = mfcz_decompose(f, lambda, sigma);
    Signal sum = dec.g;
    std::vector<char> used(grid.samples(), 0);
    for (const auto& atom : dec.atoms) {
      CHECK(atom.J.start % atom.J.cells == 0);
      for (std::size_t m = atom.J.start; m < atom.J.start + atom.J.cells; ++m) {
        CHECK(used[m] == 0);
        used[m] = 1;
      }
      const Signal b = atom.b_J(grid);
      const std::size_t s = atom.J.triple_start(grid);
      for (std::size_t m = 0; m < grid.samples(); ++m) {
        sum.values[m] += b.values[m];
        const std::size_t offset = (m + grid.samples() - s) % grid.samples();
        if (offset >= atom.J.triple_cells()) CHECK(b.values[m] == cplx{});
      }
    }
    double err = 0.0;
    for (std::size_t m = 0; m < grid.samples(); ++m) err = std::max(err, std::abs(sum.values[m] - f.values[m]));
    CHECK(err <= 1e-12 * f.norm_inf());
    const CZReport rep = verify_mfcz(dec);
    CHECK(rep.C1 <= 2.0);
    for (double c : {rep.C1, rep.C2, rep.C3, rep.C4, rep.C5}) {
      CHECK(std::isfinite(c));
      CHECK(c >= 0.0);
      CHECK(c <= 16.0);
    }
    CHECK(rep.C6 <= 1e-6);
  }
}

TEST_CASE("doubling lambda never increases the selected length") {
  std::mt19937_64 rng(44);
  const TorusGrid grid(64.0, 8192);
  for (int trial = 0; trial < 30; ++trial) {
    const Signal f = random_signal(grid, rng);
    const std::size_t N = 4;
    double prev = std::numeric_limits<double>::infinity();
    for (double lambda = 2.0 * 4.0 / grid.period(); lambda < 1e4; lambda *= 2.0) {
      double total = 0.0;
      for (const auto& J : select_intervals(f, lambda, N)) total += J.length(grid);
      CHECK(total <= prev);
      prev = total;
    }
  }
}

TEST_CASE("report without atoms") {
  Signal f(kGrid);
  for (auto& v : f.values) v = {0.1, 0.2};
  const FrequencySet sigma = FrequencySet::from_indices(kGrid, {0, 16, 32, 48});
  const CZReport rep = verify_mfcz(mfcz_decompose(f, 1.0, sigma));
  CHECK(rep.atoms == 0);
  for (double c : {rep.C1, rep.C2, rep.C4, rep.C5, rep.C6}) CHECK(c == 0.0);
  CHECK(rep.C3 == doctest::Approx(f.norm2() * f.norm2() / (2.0 * 1.0 * f.norm1())));
  std::ostringstream csv;
  write_cz_report_header(csv);
  write_cz_report_row(csv, rep);
  const std::string text = csv.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
}

TEST_CASE("parallel atom construction is deterministic") {
  std::mt19937_64 rng(45);
  const TorusGrid grid(64.0, 8192);
  const Signal f = random_signal(grid, rng);
  const FrequencySet sigma = random_separated(grid, 8, rng);
  const double lambda = std::sqrt(8.0) * 4.0 / grid.period();
  const CZDecomposition a = mfcz_decompose(f, lambda, sigma, 1);
  const CZDecomposition b = mfcz_decompose(f, lambda, sigma, 4);
  CHECK(a.g.values == b.g.values);
  REQUIRE(a.atoms.size() == b.atoms.size());
  for (std::size_t i = 0; i < a.atoms.size(); ++i) CHECK(a.atoms[i].b_local == b.atoms[i].b_local);
}

#include "mflab/mfcz.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "mflab/errors.hpp"
#include "mflab/parallel.hpp"
#include "mflab/transform.hpp"

namespace mflab {

namespace {

constexpr double kSingularCutoff = 1e-10;

std::size_t wrap(std::int64_t s, std::size_t M) {
  const auto m = static_cast<std::int64_t>(M);
  std::int64_t r = s % m;
  if (r < 0) r += m;
  return static_cast<std::size_t>(r);
}

Signal scatter(const TorusGrid& grid, std::size_t start, const std::vector<cplx>& local) {
  Signal out(grid);
  for (std::size_t i = 0; i < local.size(); ++i) out.values[(start + i) % grid.samples()] = local[i];
  return out;
}

struct LocalMatch {
  std::vector<cplx> g;
  GramDiagnostics gram;
};

// Orthogonal projection of f_J (zero-extended to 3J) onto the span of the
// sampled exponentials, via a thin SVD of the sample matrix.
LocalMatch match_local(const TorusGrid& grid, const std::vector<cplx>& f_local, const FrequencySet& sigma,
                       const SpatialInterval& J) {
  const std::size_t rows = J.triple_cells();
  const std::size_t cols = sigma.size();
  const std::size_t first = J.triple_start(grid);
  LocalMatch out;
  out.g.assign(rows, cplx{});
  out.gram.size = cols;
  if (cols == 0) return out;

  Eigen::MatrixXcd E(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    const std::int64_t n = sigma.indices()[j];
    for (std::size_t i = 0; i < rows; ++i) E(i, j) = lattice_exponential(grid, n, (first + i) % grid.samples());
  }
  Eigen::VectorXcd f = Eigen::VectorXcd::Zero(rows);
  for (std::size_t i = 0; i < J.cells; ++i) f(J.cells + i) = f_local[i];

  Eigen::BDCSVD<Eigen::MatrixXcd> svd(E, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  const double top = s.size() > 0 ? s(0) : 0.0;
  std::size_t rank = 0;
  while (rank < static_cast<std::size_t>(s.size()) && s(rank) > kSingularCutoff * top) ++rank;

  const double h = grid.step();
  out.gram.rank = rank;
  out.gram.max_singular = h * top * top;
  // Gram = h E^* E has N eigenvalues; those beyond the sample count vanish
  const double smallest = cols <= rows ? s(s.size() - 1) : 0.0;
  out.gram.min_singular = h * smallest * smallest;
  if (rank == 0) return out;

  const auto U = svd.matrixU().leftCols(rank);
  const Eigen::VectorXcd g = U * (U.adjoint() * f);
  for (std::size_t i = 0; i < rows; ++i) out.g[i] = g(i);
  return out;
}

std::vector<cplx> local_moments(const TorusGrid& grid, const std::vector<cplx>& values, std::size_t start,
                                const FrequencySet& sigma) {
  std::vector<cplx> moments(sigma.size());
  const double h = grid.step();
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    cplx acc{};
    const std::int64_t n = sigma.indices()[j];
    for (std::size_t i = 0; i < values.size(); ++i) {
      acc += values[i] * std::conj(lattice_exponential(grid, n, (start + i) % grid.samples()));
    }
    moments[j] = h * acc;
  }
  return moments;
}

}  // namespace

std::size_t SpatialInterval::triple_start(const TorusGrid& grid) const {
  return wrap(static_cast<std::int64_t>(start) - static_cast<std::int64_t>(cells), grid.samples());
}

Signal CZInterval::f_J(const TorusGrid& grid) const { return scatter(grid, J.start, f_local); }
Signal CZInterval::g_J(const TorusGrid& grid) const { return scatter(grid, J.triple_start(grid), g_local); }
Signal CZInterval::b_J(const TorusGrid& grid) const { return scatter(grid, J.triple_start(grid), b_local); }

std::vector<SpatialInterval> select_intervals(const Signal& f, double lambda, std::size_t N) {
  if (!(lambda > 0.0)) throw PreconditionError("select_intervals: lambda must be positive");
  if (N == 0) throw PreconditionError("select_intervals: N must be at least 1");
  const TorusGrid& grid = f.grid;
  const std::size_t M = grid.samples();
  if (f.values.size() != M) throw GridMismatchError("select_intervals: signal length does not match grid");

  std::vector<double> prefix(M + 1, 0.0);
  for (std::size_t m = 0; m < M; ++m) prefix[m + 1] = prefix[m] + std::abs(f.values[m]);
  const double threshold = lambda / std::sqrt(static_cast<double>(N));

  std::vector<SpatialInterval> selected;
  std::vector<SpatialInterval> stack{{0, M}};
  while (!stack.empty()) {
    const SpatialInterval node = stack.back();
    stack.pop_back();
    const double sum = prefix[node.start + node.cells] - prefix[node.start];
    if (sum / static_cast<double>(node.cells) > threshold) {
      selected.push_back(node);
      continue;
    }
    // no descendant can exceed the threshold once even a single cell cannot
    if (node.cells == 1 || sum <= threshold) continue;
    const std::size_t half = node.cells / 2;
    stack.push_back({node.start + half, half});
    stack.push_back({node.start, half});
  }
  std::sort(selected.begin(), selected.end(),
            [](const SpatialInterval& a, const SpatialInterval& b) { return a.start < b.start; });

  for (const auto& J : selected) {
    if (4 * J.cells > M) {
      std::ostringstream msg;
      msg << "select_intervals: selected interval of length " << J.length(grid)
          << " exceeds P/4; lower ||f||_1 or raise lambda";
      throw DegenerateInputError(msg.str());
    }
  }
  return selected;
}

Signal moment_match(const Signal& f_J, const FrequencySet& sigma, const SpatialInterval& J,
                    GramDiagnostics* diagnostics) {
  const TorusGrid& grid = f_J.grid;
  require_same_grid(grid, sigma.grid(), "moment_match");
  if (4 * J.cells > grid.samples() || J.start % J.cells != 0 || J.start >= grid.samples()) {
    throw PreconditionError("moment_match: 3J must fit in the torus without self-overlap");
  }
  std::vector<cplx> local(f_J.values.begin() + static_cast<std::ptrdiff_t>(J.start),
                          f_J.values.begin() + static_cast<std::ptrdiff_t>(J.start + J.cells));
  LocalMatch match = match_local(grid, local, sigma, J);
  if (diagnostics != nullptr) *diagnostics = match.gram;
  return scatter(grid, J.triple_start(grid), match.g);
}

CZDecomposition mfcz_decompose(const Signal& f, double lambda, const FrequencySet& sigma, std::size_t threads) {
  require_same_grid(f.grid, sigma.grid(), "mfcz_decompose");
  const TorusGrid& grid = f.grid;
  const std::size_t N = std::max<std::size_t>(sigma.size(), 1);
  const auto intervals = select_intervals(f, lambda, N);

  CZDecomposition dec;
  dec.f = f;
  dec.lambda = lambda;
  dec.sigma = sigma;
  dec.atoms.resize(intervals.size());

  parallel_for(intervals.size(), threads, [&](std::size_t a) {
    CZInterval& atom = dec.atoms[a];
    atom.J = intervals[a];
    atom.f_local.assign(f.values.begin() + static_cast<std::ptrdiff_t>(atom.J.start),
                        f.values.begin() + static_cast<std::ptrdiff_t>(atom.J.start + atom.J.cells));
    atom.moments = local_moments(grid, atom.f_local, atom.J.start, sigma);
    LocalMatch match = match_local(grid, atom.f_local, sigma, atom.J);
    atom.g_local = std::move(match.g);
    atom.gram = match.gram;
    atom.b_local.assign(atom.g_local.size(), cplx{});
    for (std::size_t i = 0; i < atom.g_local.size(); ++i) {
      const cplx fv = (i >= atom.J.cells && i < 2 * atom.J.cells) ? atom.f_local[i - atom.J.cells] : cplx{};
      atom.b_local[i] = fv - atom.g_local[i];
    }
  });

  dec.g = f;
  for (const auto& atom : dec.atoms) {
    const std::size_t first = atom.J.triple_start(grid);
    for (std::size_t i = 0; i < atom.b_local.size(); ++i) {
      dec.g.values[(first + i) % grid.samples()] -= atom.b_local[i];
    }
  }
  return dec;
}

CZReport verify_mfcz(const CZDecomposition& dec) {
  const TorusGrid& grid = dec.f.grid;
  const double h = grid.step();
  const double lambda = dec.lambda;
  const std::size_t N = std::max<std::size_t>(dec.sigma.size(), 1);
  const double rootN = std::sqrt(static_cast<double>(N));
  const double f1 = dec.f.norm1();

  CZReport report;
  report.lambda = lambda;
  report.N = dec.sigma.size();
  report.atoms = dec.atoms.size();
  report.worst_gram_min_singular = std::numeric_limits<double>::infinity();

  std::vector<cplx> residual = dec.f.values;
  for (std::size_t m = 0; m < residual.size(); ++m) residual[m] -= dec.g.values[m];
  double total_length = 0.0;
  for (const auto& atom : dec.atoms) {
    const double len = atom.J.length(grid);
    total_length += len;
    const double fJ1 = l1_norm(atom.f_local, h);
    report.C1 = std::max(report.C1, rootN * fJ1 / (lambda * len));
    report.C2 = std::max(report.C2, l2_norm(atom.g_local, h) / (std::sqrt(len) * lambda));
    report.C5 = std::max(report.C5, l1_norm(atom.b_local, h) / (lambda * len));
    if (fJ1 > 0.0) {
      const auto bm = local_moments(grid, atom.b_local, atom.J.triple_start(grid), dec.sigma);
      for (const auto& v : bm) report.C6 = std::max(report.C6, std::abs(v) / fJ1);
    }
    report.worst_gram_min_singular = std::min(report.worst_gram_min_singular, atom.gram.min_singular);
    if (atom.gram.min_singular > 0.0) {
      report.worst_gram_condition =
          std::max(report.worst_gram_condition, atom.gram.max_singular / atom.gram.min_singular);
    } else if (atom.gram.size > 0) {
      report.worst_gram_condition = std::numeric_limits<double>::infinity();
    }
    const std::size_t first = atom.J.triple_start(grid);
    for (std::size_t i = 0; i < atom.b_local.size(); ++i) residual[(first + i) % grid.samples()] -= atom.b_local[i];
  }
  if (dec.atoms.empty()) report.worst_gram_min_singular = 0.0;

  const double g2 = dec.g.norm2();
  if (f1 > 0.0) {
    report.C3 = g2 * g2 / (rootN * lambda * f1);
    report.C4 = lambda * total_length / (rootN * f1);
  }
  double worst = 0.0;
  for (const auto& v : residual) worst = std::max(worst, std::abs(v));
  const double scale = dec.f.norm_inf();
  report.reconstruction_error = scale > 0.0 ? worst / scale : worst;
  return report;
}

}  // namespace mflab

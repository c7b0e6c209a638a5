#include "mflab/lab/suite.hpp"

#include <fftw3.h>

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

#include "mflab/bump.hpp"
#include "mflab/errors.hpp"
#include "mflab/io.hpp"
#include "mflab/lab/estimate.hpp"
#include "mflab/lab/families.hpp"
#include "mflab/lab/svg.hpp"
#include "mflab/layers.hpp"
#include "mflab/mfcz.hpp"
#include "mflab/operators.hpp"
#include "mflab/parallel.hpp"
#include "mflab/rng.hpp"
#include "mflab/transform.hpp"
#include "mflab/whitney.hpp"
#include "mflab/windowed.hpp"

#ifndef MFLAB_VERSION
#define MFLAB_VERSION "unknown"
#endif

namespace mflab::lab {

namespace {

namespace fs = std::filesystem;

std::string fmt(double v) { return format_number(v, 12); }

template <typename T, typename Fn>
std::vector<T> run_trials(std::size_t trials, std::size_t threads, Fn&& fn) {
  std::vector<T> out(trials);
  parallel_for(trials, threads, [&](std::size_t t) { out[t] = fn(t); });
  return out;
}

std::optional<StrongFamily> strong_family(const ExperimentConfig& c) {
  if (c.family == "auto") return std::nullopt;
  if (c.family == "window-gaussian") return StrongFamily::window_gaussian;
  if (c.family == "signed-exponentials") return StrongFamily::signed_exponentials;
  if (c.family == "narrow-atom") return StrongFamily::narrow_atom;
  throw UsageError("family '" + c.family + "' is not a strong-norm input family");
}

std::optional<WeakFamily> weak_family(const ExperimentConfig& c) {
  if (c.family == "auto") return std::nullopt;
  if (c.family == "delta") return WeakFamily::delta;
  if (c.family == "haar-atom") return WeakFamily::haar_atom;
  throw UsageError("family '" + c.family + "' is not a weak-norm input family");
}

struct Context {
  const ExperimentConfig& config;
  TorusGrid grid;
  SuiteResult& result;
  std::map<std::string, std::string> extra_files;
};

void add_row(Context& ctx, double N, double estimate, std::size_t trials, const std::string& argmax,
             const std::vector<std::string>& extras) {
  std::vector<std::string> row{ctx.config.experiment, fmt(N), fmt(estimate)};
  row.insert(row.end(), extras.begin(), extras.end());
  row.push_back(std::to_string(trials));
  row.push_back(argmax);
  ctx.result.table.push_back(std::move(row));
  ctx.result.report.rows.push_back(ScalingRow{N, estimate, trials, argmax});
}

void set_columns(Context& ctx, const std::vector<std::string>& extras) {
  ctx.result.columns = {"experiment", "N", "estimate"};
  ctx.result.columns.insert(ctx.result.columns.end(), extras.begin(), extras.end());
  ctx.result.columns.push_back("trials");
  ctx.result.columns.push_back("argmax");
}

Input draw_strong(const ExperimentConfig& c, std::size_t t, const TorusGrid& grid, const FrequencySet& sigma,
                  ScaleRange range, Rng& rng) {
  const int k = std::uniform_int_distribution<int>(range.k_min, range.k_max)(rng);
  const double u = std::bernoulli_distribution(0.5)(rng) ? 1.0 : 0.5;
  const StrongFamily family = strong_family(c).value_or(static_cast<StrongFamily>(t % 3));
  Input in = strong_input(family, grid, sigma_windows(sigma, k, u), sigma.indices(), rng);
  in.descriptor += ";k=" + std::to_string(k) + ";u=" + (u == 1.0 ? "1" : "0.5");
  return in;
}

void vq_l2_scaling(Context& ctx) {
  const auto& c = ctx.config;
  const ScaleRange range = ScaleRange::defaults(ctx.grid);
  set_columns(ctx, {});
  for (std::size_t N : c.n_list) {
    const Estimate est = max_over_trials(c.trials, c.threads, [&](std::size_t t) {
      Rng rng(trial_seed(c.seed, N, t));
      const FrequencySet sigma = random_separated_set(ctx.grid, N, rng);
      const Input in = draw_strong(c, t, ctx.grid, sigma, range, rng);
      const Signal out = vq_dk(in.f, sigma, c.q, range, VariationMode::nonhomogeneous, DkVariant::separated);
      return TrialOutcome{strong_ratio(in.f, out), in.descriptor};
    });
    add_row(ctx, static_cast<double>(N), est.value, est.trials, est.argmax, {});
  }
}

void weak11_scaling(Context& ctx) {
  const auto& c = ctx.config;
  const ScaleRange range = ScaleRange::defaults(ctx.grid);
  set_columns(ctx, {});
  for (std::size_t N : c.n_list) {
    const Estimate est = max_over_trials(c.trials, c.threads, [&](std::size_t t) {
      Rng rng(trial_seed(c.seed, N, t));
      const FrequencySet sigma = random_lattice_set(ctx.grid, N, rng);
      const WeakFamily family = weak_family(c).value_or(static_cast<WeakFamily>(t % 2));
      const Input in = weak_input(family, ctx.grid, rng);
      const Signal out = vq_dk(in.f, sigma, c.q, range, VariationMode::nonhomogeneous, DkVariant::tiled);
      return TrialOutcome{weak_ratio(out, in.f.norm1()), in.descriptor};
    });
    add_row(ctx, static_cast<double>(N), est.value, est.trials, est.argmax, {});
  }
}

void rough_mult_scaling(Context& ctx) {
  const auto& c = ctx.config;
  set_columns(ctx, {});
  for (std::size_t N : c.n_list) {
    const Estimate est = max_over_trials(c.trials, c.threads, [&](std::size_t t) {
      Rng rng(trial_seed(c.seed, N, t));
      const RoughMultiplierSpec spec = random_rough_spec(ctx.grid, N, rng, false);
      const WeakFamily family = weak_family(c).value_or(static_cast<WeakFamily>(t % 2));
      const Input in = weak_input(family, ctx.grid, rng);
      return TrialOutcome{weak_ratio(rough_T(in.f, spec), in.f.norm1()), in.descriptor};
    });
    add_row(ctx, static_cast<double>(N), est.value, est.trials, est.argmax, {});
  }
}

void rvar_mult(Context& ctx) {
  const auto& c = ctx.config;
  set_columns(ctx, {"weak", "path_gap", "path_bound"});
  struct Trial {
    TrialOutcome strong, weak;
    double gap = 0.0, bound = 0.0;
  };
  for (std::size_t N : c.n_list) {
    const auto trials = run_trials<Trial>(c.trials, c.threads, [&](std::size_t t) {
      Rng rng(trial_seed(c.seed, N, t));
      const RoughMultiplierSpec spec = random_rough_spec(ctx.grid, N, rng, true);
      std::vector<IndexInterval> windows;
      std::vector<std::int64_t> centers;
      for (const auto& p : spec.pieces) {
        windows.push_back(p.omega);
        centers.push_back((p.omega.lo + p.omega.hi) / 2);
      }
      const StrongFamily sfam = static_cast<StrongFamily>(t % 3);
      const Input strong = strong_input(sfam, ctx.grid, windows, centers, rng);
      const Input weak = weak_input(static_cast<WeakFamily>(t % 2), ctx.grid, rng);
      const Signal direct = rvar_M(strong.f, spec, RvarPath::direct, c.r, c.tol);
      const Signal layered = rvar_M(strong.f, spec, RvarPath::layered, c.r, c.tol);
      Trial out;
      out.strong = {strong_ratio(strong.f, direct), strong.descriptor};
      out.weak = {weak_ratio(rvar_M(weak.f, spec, RvarPath::direct, c.r, c.tol), weak.f.norm1()), weak.descriptor};
      double diff = 0.0;
      for (std::size_t m = 0; m < ctx.grid.samples(); ++m) diff += std::norm(direct.values[m] - layered.values[m]);
      out.gap = std::sqrt(ctx.grid.step() * diff) / strong.f.norm2();
      out.bound = 10.0 * c.tol * spec.max_vr_norm(c.r);
      return out;
    });
    double best = -1.0, weak = 0.0, gap = 0.0, bound = 0.0;
    std::string argmax;
    for (const auto& tr : trials) {
      if (tr.strong.value > best) {
        best = tr.strong.value;
        argmax = tr.strong.descriptor;
      }
      weak = std::max(weak, tr.weak.value);
      gap = std::max(gap, tr.gap);
      bound = std::max(bound, tr.bound);
    }
    add_row(ctx, static_cast<double>(N), best, c.trials, argmax, {fmt(weak), fmt(gap), fmt(bound)});
  }
}

Signal random_cz_signal(const TorusGrid& grid, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> normal;
  const double P = grid.period();
  Signal f(grid);
  const int parts = std::uniform_int_distribution<int>(1, 4)(rng);
  for (int p = 0; p < parts; ++p) {
    const double x0 = P / 4 + unit(rng) * P / 2;
    const double width = 4.0 * grid.step() * std::pow(2.0, unit(rng) * std::log2(2.0 / (4.0 * grid.step())));
    const bool box = unit(rng) < 0.5;
    const cplx amp{normal(rng), normal(rng)};
    for (std::size_t m = 0; m < grid.samples(); ++m) {
      const double d = (grid.position(m) - x0) / width;
      const double v = box ? (std::abs(d) < 0.5 ? 1.0 : 0.0) : bump_profile(d, 0.25, 0.5);
      if (v != 0.0) f.values[m] += amp * v;
    }
  }
  const double mass = f.norm1();
  for (auto& v : f.values) v /= mass;
  return f;
}

void mfcz_experiment(Context& ctx) {
  const auto& c = ctx.config;
  set_columns(ctx, {"C1", "C2", "C4", "C5", "C6", "reconstruction_error", "gram_min_singular"});
  std::ostringstream reports;
  reports << "trial,";
  write_cz_report_header(reports);
  for (std::size_t N : c.n_list) {
    const auto trials = run_trials<CZReport>(c.trials, c.threads, [&](std::size_t t) {
      Rng rng(trial_seed(c.seed, N, t));
      const FrequencySet sigma = random_separated_set(ctx.grid, N, rng);
      const Signal f = random_cz_signal(ctx.grid, rng);
      const double tau = 4.0 / ctx.grid.period() * std::pow(2.0, std::uniform_real_distribution<double>(0.0, 3.0)(rng));
      const double lambda = std::sqrt(static_cast<double>(N)) * tau;
      return verify_mfcz(mfcz_decompose(f, lambda, sigma));
    });
    CZReport worst;
    worst.worst_gram_min_singular = std::numeric_limits<double>::infinity();
    std::size_t arg = 0;
    for (std::size_t t = 0; t < trials.size(); ++t) {
      const CZReport& r = trials[t];
      reports << t << ',';
      write_cz_report_row(reports, r);
      if (t == 0 || r.C3 > worst.C3) {
        worst.C3 = r.C3;
        arg = t;
      }
      worst.C1 = std::max(worst.C1, r.C1);
      worst.C2 = std::max(worst.C2, r.C2);
      worst.C4 = std::max(worst.C4, r.C4);
      worst.C5 = std::max(worst.C5, r.C5);
      worst.C6 = std::max(worst.C6, r.C6);
      worst.reconstruction_error = std::max(worst.reconstruction_error, r.reconstruction_error);
      if (r.atoms > 0) worst.worst_gram_min_singular = std::min(worst.worst_gram_min_singular, r.worst_gram_min_singular);
    }
    if (!std::isfinite(worst.worst_gram_min_singular)) worst.worst_gram_min_singular = 0.0;
    add_row(ctx, static_cast<double>(N), worst.C3, c.trials, "trial=" + std::to_string(arg),
            {fmt(worst.C1), fmt(worst.C2), fmt(worst.C4), fmt(worst.C5), format_number(worst.C6, 6),
             format_number(worst.reconstruction_error, 6), fmt(worst.worst_gram_min_singular)});
  }
  ctx.extra_files["mfcz_reports.csv"] = reports.str();
}

SpectralSymbol random_vr_symbol(const TorusGrid& grid, std::size_t jumps, Rng& rng, IndexInterval window) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::int64_t> cuts;
  for (std::size_t i = 0; i < jumps; ++i) {
    cuts.push_back(std::uniform_int_distribution<std::int64_t>(window.lo + 1, window.hi - 1)(rng));
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(window.hi);
  const double freq = 1.0 + 4.0 * unit(rng);
  const double ripple = 0.2 * unit(rng);
  SpectralSymbol g(grid);
  std::int64_t at = window.lo;
  for (std::int64_t cut : cuts) {
    const double t = 2.0 * std::numbers::pi * unit(rng);
    const cplx level = std::sqrt(unit(rng)) * cplx{std::cos(t), std::sin(t)};
    for (; at < cut; ++at) {
      const double x = static_cast<double>(at - window.lo) / static_cast<double>(window.length());
      g.at(at) = level + ripple * std::sin(2.0 * std::numbers::pi * freq * x);
    }
  }
  return g;
}

void layers_experiment(Context& ctx) {
  const auto& c = ctx.config;
  set_columns(ctx, {"count_ratio", "coefficient_ratio", "reconstruction_error", "disjoint"});
  struct Trial {
    double pieces = 0, count_ratio = 0, coef_ratio = 0, recon = 0;
    bool disjoint = true;
    std::string layers_csv;
  };
  const IndexInterval window{0, 256};
  for (std::size_t N : c.n_list) {
    const auto trials = run_trials<Trial>(c.trials, c.threads, [&](std::size_t t) {
      Rng rng(trial_seed(c.seed, N, t));
      const SpectralSymbol g = random_vr_symbol(ctx.grid, N, rng, window);
      const LayeredSymbol ls = vr_layer_decompose(g, c.r, c.tol);
      Trial out;
      for (std::size_t j = 0; j < ls.layers.size(); ++j) {
        const auto& layer = ls.layers[j];
        out.pieces += static_cast<double>(layer.size());
        out.count_ratio = std::max(out.count_ratio, static_cast<double>(layer.size()) / (std::ldexp(2.0, static_cast<int>(j)) + 2.0));
        for (std::size_t i = 0; i < layer.size(); ++i) {
          out.coef_ratio = std::max(out.coef_ratio, std::abs(layer[i].d) / (3.0 * ls.threshold(static_cast<int>(j))));
          if (i > 0 && layer[i - 1].interval.hi > layer[i].interval.lo) out.disjoint = false;
        }
      }
      const SpectralSymbol back = ls.reconstruct();
      double err = 0.0;
      for (std::size_t i = 0; i < g.values.size(); ++i) err = std::max(err, std::abs(back.values[i] - g.values[i]));
      double rem = 0.0;
      for (const auto& v : ls.remainder.values) rem = std::max(rem, std::abs(v));
      out.recon = std::max(err, rem) / ls.v;
      if (t == 0) {
        std::ostringstream csv;
        write_layers_csv(csv, ls);
        out.layers_csv = csv.str();
      }
      return out;
    });
    double pieces = 0, cr = 0, dr = 0, rec = 0;
    bool disjoint = true;
    for (const auto& tr : trials) {
      pieces = std::max(pieces, tr.pieces);
      cr = std::max(cr, tr.count_ratio);
      dr = std::max(dr, tr.coef_ratio);
      rec = std::max(rec, tr.recon);
      disjoint = disjoint && tr.disjoint;
    }
    add_row(ctx, static_cast<double>(N), pieces, c.trials, "max-total-pieces",
            {fmt(cr), fmt(dr), format_number(rec, 6), disjoint ? "1" : "0"});
    if (N == c.n_list.back()) ctx.extra_files["layers_intervals.csv"] = trials.front().layers_csv;
  }
}

void whitney_experiment(Context& ctx) {
  const auto& c = ctx.config;
  set_columns(ctx, {"omega_cells", "R", "pieces", "flagged_mass", "C2", "partition_error"});
  const auto M = static_cast<std::int64_t>(ctx.grid.samples());
  struct Trial {
    WhitneySystem sys;
    double partition_error = 0.0;
  };
  for (std::size_t N : c.n_list) {
    if (M / 2 < 4096) throw UsageError("whitney needs grid-samples >= 8192");
    const std::int64_t length = std::clamp<std::int64_t>(static_cast<std::int64_t>(N) * 256, 4096, M / 2);
    const auto trials = run_trials<Trial>(c.trials, c.threads, [&](std::size_t t) {
      Rng rng(trial_seed(c.seed, N, t));
      const std::int64_t lo =
          std::uniform_int_distribution<std::int64_t>(ctx.grid.min_index() + 1, ctx.grid.end_index() - length - 1)(rng);
      Trial out;
      out.sys = window_system(whitney_decompose(ctx.grid, {lo, lo + length}));
      const IndexInterval probe{lo - 8, lo + length + 8};
      const auto sum = out.sys.partition_sum(probe);
      for (std::int64_t n = probe.lo; n < probe.hi; ++n) {
        const double want = (n >= lo && n < lo + length) ? 1.0 : 0.0;
        out.partition_error = std::max(out.partition_error, std::abs(sum[static_cast<std::size_t>(n - probe.lo)] - want));
      }
      out.sys.windows.clear();
      return out;
    });
    double K = 0, R = 0, pieces = 0, flagged = 0, C2 = 0, perr = 0;
    for (const auto& tr : trials) {
      K = std::max(K, static_cast<double>(tr.sys.overlap_K));
      R = std::max(R, static_cast<double>(tr.sys.R));
      pieces = std::max(pieces, static_cast<double>(tr.sys.pieces.size()));
      flagged = std::max(flagged, tr.sys.flagged_mass);
      C2 = std::max(C2, tr.sys.C2);
      perr = std::max(perr, tr.partition_error);
    }
    add_row(ctx, static_cast<double>(N), K, c.trials, "max-overlap-K",
            {std::to_string(length), fmt(R), fmt(pieces), fmt(flagged), fmt(C2), format_number(perr, 6)});
    if (N == c.n_list.back()) {
      std::ostringstream csv;
      write_whitney_csv(csv, trials.front().sys);
      ctx.extra_files["whitney_pieces.csv"] = csv.str();
    }
  }
}

void window_check(Context& ctx) {
  const auto& c = ctx.config;
  set_columns(ctx, {"full_error"});
  const TorusGrid& grid = ctx.grid;
  struct Trial {
    std::vector<double> truncated;
    double full = 0.0;
    std::string descriptor;
  };
  const auto trials = run_trials<Trial>(c.trials, c.threads, [&](std::size_t t) {
    Rng rng(trial_seed(c.seed, 0, t));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int k = static_cast<int>(t % 3);
    const std::int64_t cells = tile_cells(grid, k);
    const auto tiles = static_cast<std::int64_t>(std::floor(grid.nyquist() / 4.0 * grid.period())) / cells;
    const std::int64_t m = std::uniform_int_distribution<std::int64_t>(-tiles, tiles - 1)(rng);
    const DyadicFreqInterval omega{k, m, std::nullopt};
    const IndexInterval band = omega.index_range(grid);
    Signal f(grid);
    for (int a = 0; a < 3; ++a) {
      const std::int64_t xi =
          std::uniform_int_distribution<std::int64_t>(band.lo - cells / 2, band.hi + cells / 2 - 1)(rng);
      const double x0 = 2.0 * unit(rng) - 1.0;
      const double width = 0.25 + 1.75 * unit(rng);
      const double phase = 2.0 * std::numbers::pi * unit(rng);
      for (std::size_t s = 0; s < grid.samples(); ++s) {
        double d = grid.position(s) - x0;
        d -= grid.period() * std::round(d / grid.period());
        const double env = bump_profile(d / width, 0.25, 0.5);
        if (env != 0.0) f.values[s] += env * cplx{std::cos(phase), std::sin(phase)} * lattice_exponential(grid, xi, s);
      }
    }
    const WindowExpansion ex = windowed_expand(f, omega, 0);
    Trial out;
    out.full = ex.full_error;
    const double norm = f.norm2();
    for (std::size_t N : c.n_list) out.truncated.push_back(ex.partial_error(N, norm));
    std::ostringstream d;
    d << "omega(k=" << k << ";m=" << m << ")";
    out.descriptor = d.str();
    return out;
  });
  double full = 0.0;
  for (const auto& tr : trials) full = std::max(full, tr.full);
  for (std::size_t i = 0; i < c.n_list.size(); ++i) {
    double best = -1.0;
    std::string arg;
    for (const auto& tr : trials) {
      if (tr.truncated[i] > best) {
        best = tr.truncated[i];
        arg = tr.descriptor;
      }
    }
    add_row(ctx, static_cast<double>(c.n_list[i]), best, c.trials, arg, {format_number(full, 6)});
  }
}

void write_file(const fs::path& path, const std::string& content, SuiteResult& result) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw Error("failed writing '" + path.string() + "'");
  result.files.push_back(path.string());
}

std::string fit_csv(const SuiteResult& r) {
  std::ostringstream out;
  out << "experiment,alpha,r2_power,beta,r2_log,preferred,degenerate,rows\n";
  if (!r.has_fit) {
    out << r.experiment << ",nan,nan,nan,nan,n/a,1,0\n";
    return out.str();
  }
  const FitResult& f = r.report.fit;
  out << r.experiment << ',' << fmt(f.alpha) << ',' << fmt(f.r2_power) << ',' << fmt(f.beta) << ','
      << fmt(f.r2_log) << ',' << to_string(f.preferred) << ',' << (f.degenerate ? 1 : 0) << ',' << f.rows << '\n';
  return out.str();
}

}  // namespace

SuiteResult run_suite(const ExperimentConfig& config) {
  validate(config);
  SuiteResult result;
  result.experiment = config.experiment;
  Context ctx{config, config.grid(), result, {}};

  const std::map<std::string, std::function<void(Context&)>> experiments{
      {"vq-l2-scaling", vq_l2_scaling}, {"weak11-scaling", weak11_scaling},
      {"rough-mult-scaling", rough_mult_scaling}, {"rvar-mult", rvar_mult},
      {"mfcz", mfcz_experiment}, {"layers", layers_experiment},
      {"whitney", whitney_experiment}, {"window-check", window_check}};
  experiments.at(config.experiment)(ctx);

  auto& rows = result.report.rows;
  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return rows[a].N < rows[b].N; });
  std::vector<ScalingRow> sorted_rows;
  std::vector<std::vector<std::string>> sorted_table;
  for (auto i : order) {
    sorted_rows.push_back(rows[i]);
    sorted_table.push_back(result.table[i]);
  }
  rows = std::move(sorted_rows);
  result.table = std::move(sorted_table);

  try {
    result.report.fit = fit_scaling(rows);
    result.has_fit = true;
  } catch (const DomainError&) {
    result.has_fit = false;
  }

  const fs::path dir(config.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error("cannot create output directory '" + config.out + "': " + ec.message());

  std::ostringstream csv;
  for (std::size_t i = 0; i < result.columns.size(); ++i) csv << (i ? "," : "") << result.columns[i];
  csv << '\n';
  for (const auto& row : result.table) {
    for (std::size_t i = 0; i < row.size(); ++i) csv << (i ? "," : "") << row[i];
    csv << '\n';
  }
  write_file(dir / (config.experiment + ".csv"), csv.str(), result);
  write_file(dir / (config.experiment + "_fit.csv"), fit_csv(result), result);
  for (const auto& [name, content] : ctx.extra_files) write_file(dir / name, content, result);
  if (config.format == OutputFormat::csv_svg) {
    write_file(dir / (config.experiment + ".svg"),
               scaling_svg(rows, result.report.fit, config.experiment, "estimate"), result);
  }

  std::ostringstream manifest;
  manifest << "# mflab run manifest\n"
           << describe(config)
           << "seed-rule=trial_seed(seed, N, trial) = splitmix64(splitmix64(splitmix64(seed) ^ N) ^ trial)\n"
           << "mflab-version=" << MFLAB_VERSION << '\n'
           << "fftw-version=" << fftw_version << '\n'
           << "eigen-version=" << EIGEN_WORLD_VERSION << '.' << EIGEN_MAJOR_VERSION << '.' << EIGEN_MINOR_VERSION << '\n'
           << "compiler=" << __VERSION__ << '\n';
  for (const auto& f : result.files) manifest << "file=" << fs::path(f).filename().string() << '\n';
  write_file(dir / "manifest.txt", manifest.str(), result);
  return result;
}

}  // namespace mflab::lab

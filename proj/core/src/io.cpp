#include "mflab/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "mflab/errors.hpp"

namespace mflab {

std::string format_number(double value, int precision) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", precision, value);
  return buffer;
}

void write_signal_csv(std::ostream& out, const Signal& f) {
  out << "index,re,im\n";
  for (std::size_t m = 0; m < f.values.size(); ++m) {
    out << m << ',' << format_number(f.values[m].real()) << ',' << format_number(f.values[m].imag()) << '\n';
  }
}

namespace {

std::vector<std::vector<std::string>> read_rows(std::istream& in, std::size_t columns) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  if (!std::getline(in, line)) throw Error("csv: missing header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != columns) throw Error("csv: wrong number of columns in '" + line + "'");
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

Signal read_signal_csv(std::istream& in, const TorusGrid& grid) {
  Signal f(grid);
  const auto rows = read_rows(in, 3);
  if (rows.size() != grid.samples()) throw GridMismatchError("read_signal_csv: row count does not match grid");
  for (const auto& row : rows) {
    const auto m = std::stoull(row[0]);
    if (m >= grid.samples()) throw GridMismatchError("read_signal_csv: sample index out of range");
    f.values[m] = {std::stod(row[1]), std::stod(row[2])};
  }
  return f;
}

void write_spectrum_csv(std::ostream& out, const Spectrum& s) {
  out << "index,re,im\n";
  for (std::int64_t n = s.grid.min_index(); n < s.grid.end_index(); ++n) {
    const cplx v = s.at(n);
    out << n << ',' << format_number(v.real()) << ',' << format_number(v.imag()) << '\n';
  }
}

Spectrum read_spectrum_csv(std::istream& in, const TorusGrid& grid) {
  Spectrum s(grid);
  const auto rows = read_rows(in, 3);
  if (rows.size() != grid.samples()) throw GridMismatchError("read_spectrum_csv: row count does not match grid");
  for (const auto& row : rows) {
    const auto n = std::stoll(row[0]);
    if (!grid.contains_index(n)) throw GridMismatchError("read_spectrum_csv: frequency index out of range");
    s.at(n) = {std::stod(row[1]), std::stod(row[2])};
  }
  return s;
}

void write_grid_config(std::ostream& out, const TorusGrid& grid) {
  out << "period=" << format_number(grid.period()) << "\nsamples=" << grid.samples() << '\n';
}

TorusGrid read_grid_config(std::istream& in) {
  double period = 128.0;
  std::size_t samples = std::size_t{1} << 15;
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    if (key == "period") period = std::stod(value);
    else if (key == "samples") samples = std::stoull(value);
  }
  return TorusGrid(period, samples);
}

void write_entropy_profile_csv(std::ostream& out, const EntropyProfile& profile) {
  out << "lambda,count\n";
  for (std::size_t i = 0; i < profile.counts.size(); ++i) {
    out << format_number(profile.breakpoints[i]) << ',' << profile.counts[i] << '\n';
  }
  out << format_number(profile.radius) << ",0\n";
}

void write_cz_report_header(std::ostream& out) {
  out << "lambda,N,atoms,C1,C2,C3,C4,C5,C6,reconstruction_error,gram_min_singular\n";
}

void write_cz_report_row(std::ostream& out, const CZReport& r) {
  out << format_number(r.lambda, 10) << ',' << r.N << ',' << r.atoms << ',' << format_number(r.C1, 10) << ','
      << format_number(r.C2, 10) << ',' << format_number(r.C3, 10) << ',' << format_number(r.C4, 10) << ','
      << format_number(r.C5, 10) << ',' << format_number(r.C6, 6) << ',' << format_number(r.reconstruction_error, 6)
      << ',' << format_number(r.worst_gram_min_singular, 10) << '\n';
}

void write_layers_csv(std::ostream& out, const LayeredSymbol& layered) {
  out << "j,interval_lo,interval_hi,re_d,im_d\n";
  const TorusGrid& grid = layered.grid;
  for (std::size_t j = 0; j < layered.layers.size(); ++j) {
    for (const auto& piece : layered.layers[j]) {
      out << j << ',' << format_number(grid.frequency(piece.interval.lo)) << ','
          << format_number(grid.frequency(piece.interval.hi)) << ',' << format_number(piece.d.real()) << ','
          << format_number(piece.d.imag()) << '\n';
    }
  }
}

void write_whitney_csv(std::ostream& out, const WhitneySystem& sys) {
  out << "piece_lo,piece_hi,cells,envelope_cells,flagged,K,R\n";
  const TorusGrid& grid = sys.grid;
  for (const auto& p : sys.pieces) {
    out << format_number(grid.frequency(p.u.lo)) << ',' << format_number(grid.frequency(p.u.hi)) << ',' << p.cells()
        << ',' << 4 * p.cells() << ',' << (p.flagged ? 1 : 0) << ',' << sys.overlap_K << ',' << sys.R << '\n';
  }
}

}  // namespace mflab

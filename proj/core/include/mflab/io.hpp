#pragma once

#include <iosfwd>
#include <string>

#include "mflab/entropy.hpp"
#include "mflab/grid.hpp"
#include "mflab/layers.hpp"
#include "mflab/mfcz.hpp"
#include "mflab/whitney.hpp"

namespace mflab {

/// Shortest "%.17g" style rendering; identical inputs give identical text.
std::string format_number(double value, int precision = 17);

/// index,re,im with index the sample number m.
void write_signal_csv(std::ostream& out, const Signal& f);
Signal read_signal_csv(std::istream& in, const TorusGrid& grid);

/// index,re,im with index the signed frequency index, ascending.
void write_spectrum_csv(std::ostream& out, const Spectrum& s);
Spectrum read_spectrum_csv(std::istream& in, const TorusGrid& grid);

/// period=...\nsamples=...\n
void write_grid_config(std::ostream& out, const TorusGrid& grid);
TorusGrid read_grid_config(std::istream& in);

/// lambda,count: count holds on (lambda, next lambda); the last row is (rho, 0).
void write_entropy_profile_csv(std::ostream& out, const EntropyProfile& profile);

void write_cz_report_header(std::ostream& out);
void write_cz_report_row(std::ostream& out, const CZReport& report);

/// j,interval_lo,interval_hi,re_d,im_d with physical frequency bounds.
void write_layers_csv(std::ostream& out, const LayeredSymbol& layered);

/// One row per piece: bounds (physical), cells, flags, K and R.
void write_whitney_csv(std::ostream& out, const WhitneySystem& sys);

}  // namespace mflab

#include "mflab/lab/fit.hpp"

#include <cmath>
#include <limits>

#include "mflab/errors.hpp"

namespace mflab::lab {

const char* to_string(PreferredModel model) {
  switch (model) {
    case PreferredModel::power:
      return "power";
    case PreferredModel::log_power:
      return "log-power";
    case PreferredModel::undetermined:
      return "undetermined";
  }
  return "?";
}

namespace {

struct Line {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

Line least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  Line line;
  line.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  line.intercept = my - line.slope * mx;
  double ssr = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - (line.intercept + line.slope * x[i]);
    ssr += e * e;
  }
  line.r2 = syy > 0.0 ? std::max(0.0, std::min(1.0, 1.0 - ssr / syy)) : std::numeric_limits<double>::quiet_NaN();
  return line;
}

}  // namespace

FitResult fit_scaling(const std::vector<ScalingRow>& rows) {
  if (rows.size() < 4) throw DomainError("fit_scaling: need at least four rows");
  std::vector<double> logN, loglogN, logE;
  for (const auto& row : rows) {
    if (!(row.N > 1.0)) throw DomainError("fit_scaling: N must exceed 1");
    if (!(row.estimate > 0.0) || !std::isfinite(row.estimate)) {
      throw DomainError("fit_scaling: estimates must be positive and finite");
    }
    logN.push_back(std::log(row.N));
    loglogN.push_back(std::log(std::log(row.N)));
    logE.push_back(std::log(row.estimate));
  }
  FitResult fit;
  fit.rows = rows.size();

  double spread = 0.0;
  for (double v : logE) spread = std::max(spread, std::abs(v - logE.front()));
  if (spread <= 1e-12 * std::max(1.0, std::abs(logE.front()))) {
    fit.degenerate = true;
    fit.intercept_power = fit.intercept_log = logE.front();
    fit.r2_power = fit.r2_log = std::numeric_limits<double>::quiet_NaN();
    return fit;
  }
  const Line power = least_squares(logN, logE);
  const Line logp = least_squares(loglogN, logE);
  fit.alpha = power.slope;
  fit.intercept_power = power.intercept;
  fit.r2_power = power.r2;
  fit.beta = logp.slope;
  fit.intercept_log = logp.intercept;
  fit.r2_log = logp.r2;
  fit.preferred = fit.r2_power >= fit.r2_log ? PreferredModel::power : PreferredModel::log_power;
  return fit;
}

}  // namespace mflab::lab

#include "mflab/lab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mflab/io.hpp"

namespace mflab::lab {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) { return format_number(v, 6); }

}  // namespace

std::string scaling_svg(const std::vector<ScalingRow>& rows, const FitResult& fit, const std::string& title,
                        const std::string& y_label) {
  std::vector<ScalingRow> pts;
  for (const auto& r : rows) {
    if (r.N > 0.0 && r.estimate > 0.0) pts.push_back(r);
  }
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << escape(title)
      << "</text>\n";
  if (pts.empty()) {
    svg << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight / 2 << "\" text-anchor=\"middle\">no data</text>\n</svg>\n";
    return svg.str();
  }

  double x0 = std::log10(pts.front().N), x1 = x0, y0 = std::log10(pts.front().estimate), y1 = y0;
  for (const auto& p : pts) {
    x0 = std::min(x0, std::log10(p.N));
    x1 = std::max(x1, std::log10(p.N));
    y0 = std::min(y0, std::log10(p.estimate));
    y1 = std::max(y1, std::log10(p.estimate));
  }
  if (x1 - x0 < 1e-9) { x0 -= 0.5; x1 += 0.5; }
  if (y1 - y0 < 1e-9) { y0 -= 0.5; y1 += 0.5; }
  const double padx = 0.05 * (x1 - x0), pady = 0.1 * (y1 - y0);
  x0 -= padx; x1 += padx; y0 -= pady; y1 += pady;
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto sx = [&](double lx) { return kLeft + (lx - x0) / (x1 - x0) * pw; };
  auto sy = [&](double ly) { return kTop + (y1 - ly) / (y1 - y0) * ph; };

  svg << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int e = static_cast<int>(std::ceil(x0)); e <= static_cast<int>(std::floor(x1)); ++e) {
    svg << "<text x=\"" << num(sx(e)) << "\" y=\"" << kHeight - kBottom + 18 << "\" text-anchor=\"middle\">1e" << e
        << "</text>\n";
  }
  for (const auto& p : pts) {
    svg << "<text x=\"" << num(sx(std::log10(p.N))) << "\" y=\"" << kHeight - kBottom + 32
        << "\" text-anchor=\"middle\" font-size=\"9\">" << num(p.N) << "</text>\n";
  }
  for (int i = 0; i <= 4; ++i) {
    const double ly = y0 + (y1 - y0) * i / 4.0;
    svg << "<text x=\"" << kLeft - 6 << "\" y=\"" << num(sy(ly) + 4) << "\" text-anchor=\"end\">"
        << num(std::pow(10.0, ly)) << "</text>\n";
  }
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 6 << "\" text-anchor=\"middle\">N</text>\n";
  svg << "<text x=\"14\" y=\"" << kHeight / 2 << "\" transform=\"rotate(-90 14 " << kHeight / 2
      << ")\" text-anchor=\"middle\">" << escape(y_label) << "</text>\n";

  if (!fit.degenerate && fit.rows > 0) {
    std::ostringstream power, logp;
    for (int i = 0; i <= 100; ++i) {
      const double lx = x0 + (x1 - x0) * i / 100.0;
      const double n = std::pow(10.0, lx);
      const double yp = (fit.intercept_power + fit.alpha * std::log(n)) / std::log(10.0);
      power << (i ? " " : "") << num(sx(lx)) << ',' << num(sy(yp));
      if (n > 1.0 + 1e-9) {
        const double yl = (fit.intercept_log + fit.beta * std::log(std::log(n))) / std::log(10.0);
        if (yl >= y0 - 2 * (y1 - y0) && yl <= y1 + 2 * (y1 - y0)) {
          logp << (logp.tellp() > 0 ? " " : "") << num(sx(lx)) << ',' << num(sy(yl));
        }
      }
    }
    svg << "<clipPath id=\"plot\"><rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\""
        << ph << "\"/></clipPath>\n";
    svg << "<polyline clip-path=\"url(#plot)\" fill=\"none\" stroke=\"#1f77b4\" points=\"" << power.str() << "\"/>\n";
    svg << "<polyline clip-path=\"url(#plot)\" fill=\"none\" stroke=\"#d62728\" stroke-dasharray=\"5,3\" points=\""
        << logp.str() << "\"/>\n";
    svg << "<text x=\"" << kLeft + 8 << "\" y=\"" << kTop + 16 << "\" fill=\"#1f77b4\">N^" << num(fit.alpha)
        << "  (R2=" << num(fit.r2_power) << ")</text>\n";
    svg << "<text x=\"" << kLeft + 8 << "\" y=\"" << kTop + 32 << "\" fill=\"#d62728\">(log N)^" << num(fit.beta)
        << "  (R2=" << num(fit.r2_log) << ")</text>\n";
  }
  for (const auto& p : pts) {
    svg << "<circle cx=\"" << num(sx(std::log10(p.N))) << "\" cy=\"" << num(sy(std::log10(p.estimate)))
        << "\" r=\"4\" fill=\"black\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace mflab::lab

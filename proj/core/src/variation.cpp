#include "mflab/variation.hpp"

#include <algorithm>
#include <cmath>

#include "mflab/errors.hpp"

namespace mflab {

VectorSequence::VectorSequence(std::size_t dim, std::vector<cplx> data) : dim_(dim), data_(std::move(data)) {
  if (dim_ == 0 || data_.size() % dim_ != 0) {
    throw DomainError("VectorSequence: data length is not a multiple of the dimension");
  }
}

VectorSequence VectorSequence::scalars(std::span<const cplx> values) {
  return VectorSequence(1, std::vector<cplx>(values.begin(), values.end()));
}

VectorSequence VectorSequence::reals(std::span<const double> values) {
  std::vector<cplx> data(values.begin(), values.end());
  return VectorSequence(1, std::move(data));
}

VectorSequence VectorSequence::real_points(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw DomainError("VectorSequence: no points");
  const std::size_t dim = rows.front().size();
  std::vector<cplx> data;
  data.reserve(rows.size() * dim);
  for (const auto& row : rows) {
    if (row.size() != dim) throw DomainError("VectorSequence: ragged point list");
    data.insert(data.end(), row.begin(), row.end());
  }
  return VectorSequence(dim, std::move(data));
}

double VectorSequence::distance(std::size_t i, std::size_t j) const {
  const auto a = point(i);
  const auto b = point(j);
  double sum = 0.0;
  for (std::size_t t = 0; t < dim_; ++t) sum += std::norm(a[t] - b[t]);
  return std::sqrt(sum);
}

double VectorSequence::norm(std::size_t i) const {
  double sum = 0.0;
  for (const auto& v : point(i)) sum += std::norm(v);
  return std::sqrt(sum);
}

namespace {

void check_exponent(double q) {
  if (!(q >= 1.0) || !std::isfinite(q)) throw DomainError("variation exponent must be >= 1");
}

template <typename Distance>
double best_chain_power(std::size_t n, double q, Distance&& distance) {
  std::vector<double> best(n, 0.0);
  double top = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    double b = 0.0;
    for (std::size_t j = 0; j < i; ++j) {
      const double d = distance(i, j);
      if (d == 0.0) {
        b = std::max(b, best[j]);
      } else {
        b = std::max(b, best[j] + std::pow(d, q));
      }
    }
    best[i] = b;
    top = std::max(top, b);
  }
  return top;
}

}  // namespace

double variation_norm(const VectorSequence& seq, double q, VariationMode mode) {
  check_exponent(q);
  const std::size_t n = seq.size();
  if (n == 0) throw DomainError("variation_norm: empty sequence");
  const double chain =
      best_chain_power(n, q, [&](std::size_t i, std::size_t j) { return seq.distance(i, j); });
  double value = std::pow(chain, 1.0 / q);
  if (mode == VariationMode::nonhomogeneous) {
    double sup = 0.0;
    for (std::size_t i = 0; i < n; ++i) sup = std::max(sup, seq.norm(i));
    value += sup;
  }
  return value;
}

double variation_norm(std::span<const cplx> values, double q, VariationMode mode) {
  check_exponent(q);
  const std::size_t n = values.size();
  if (n == 0) throw DomainError("variation_norm: empty sequence");
  const double chain =
      best_chain_power(n, q, [&](std::size_t i, std::size_t j) { return std::abs(values[i] - values[j]); });
  double value = chain > 0.0 ? std::pow(chain, 1.0 / q) : 0.0;
  if (mode == VariationMode::nonhomogeneous) {
    double sup = 0.0;
    for (const auto& v : values) sup = std::max(sup, std::abs(v));
    value += sup;
  }
  return value;
}

double symbol_vr_norm(std::span<const cplx> samples, double r) {
  return variation_norm(samples, r, VariationMode::nonhomogeneous);
}

double symbol_vr_norm(const SpectralSymbol& symbol, IndexInterval window, double r) {
  if (window.empty()) throw DomainError("symbol_vr_norm: empty window");
  std::vector<cplx> samples;
  samples.reserve(static_cast<std::size_t>(window.length()));
  for (std::int64_t n = window.lo; n < window.hi; ++n) samples.push_back(symbol.at(n));
  return symbol_vr_norm(samples, r);
}

}  // namespace mflab

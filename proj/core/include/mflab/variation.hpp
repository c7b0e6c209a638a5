#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mflab/grid.hpp"

namespace mflab {

/// Points c_1..c_n of C^d stored row-major.
class VectorSequence {
 public:
  VectorSequence() = default;
  VectorSequence(std::size_t dim, std::vector<cplx> data);

  static VectorSequence scalars(std::span<const cplx> values);
  static VectorSequence reals(std::span<const double> values);
  /// Points of R^d given as n rows of d coordinates.
  static VectorSequence real_points(const std::vector<std::vector<double>>& rows);

  std::size_t size() const { return dim_ == 0 ? 0 : data_.size() / dim_; }
  std::size_t dim() const { return dim_; }
  bool empty() const { return size() == 0; }
  std::span<const cplx> point(std::size_t i) const { return {data_.data() + i * dim_, dim_}; }
  const std::vector<cplx>& data() const { return data_; }

  double distance(std::size_t i, std::size_t j) const;
  double norm(std::size_t i) const;

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

enum class VariationMode { homogeneous, nonhomogeneous };

/// q-variation of the sequence.
///
/// The homogeneous part is the sup over increasing index chains of
/// (sum ||c_{k_m} - c_{k_{m-1}}||^q)^{1/q}, found exactly by the O(n^2)
/// recursion best[i] = max_{j<i} best[j] + ||c_i - c_j||^q. The
/// nonhomogeneous mode adds sup_k ||c_k||. Throws DomainError when empty or
/// q < 1.
double variation_norm(const VectorSequence& seq, double q, VariationMode mode);

/// Scalar fast path used pointwise by the operators.
double variation_norm(std::span<const cplx> values, double q, VariationMode mode);

/// ||h||_{V^r} = sup|h| + homogeneous r-variation of the lattice samples of
/// `symbol` over `window`.
double symbol_vr_norm(const SpectralSymbol& symbol, IndexInterval window, double r);
double symbol_vr_norm(std::span<const cplx> samples, double r);

}  // namespace mflab

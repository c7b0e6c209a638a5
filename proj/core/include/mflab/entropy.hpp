#pragma once

#include <cstddef>
#include <vector>

#include "mflab/variation.hpp"

namespace mflab {

enum class EntropyMethod {
  greedy,  ///< farthest-point packing count, lowest index wins ties
  exact,   ///< minimum radius-lambda cover, brute force, n <= 12
};

/// Number of radius-lambda balls needed to cover the points.
///
/// The greedy count g satisfies exact(lambda) <= g(lambda) <= exact(lambda/2).
std::size_t entropy_count(const VectorSequence& points, double lambda, EntropyMethod method);

/// Piecewise-constant greedy entropy lambda -> M_lambda on (0, rho).
///
/// breakpoints = {0 = l_0 < l_1 < ... < l_K = rho}; counts[i] is the count on
/// the open interval (l_i, l_{i+1}). Above rho the cover needs one ball, but
/// the effective count used by the integrals is zero there.
struct EntropyProfile {
  std::vector<double> breakpoints;
  std::vector<std::size_t> counts;
  double radius = 0.0;  ///< rho, the minimum enclosing-ball radius

  std::size_t count(double lambda) const;
  std::size_t effective(double lambda) const;
};

EntropyProfile greedy_entropy_profile(const VectorSequence& points);

/// Farthest-point insertion radii r_2 >= r_3 >= ... (r_1 = +inf omitted).
std::vector<double> farthest_point_radii(const VectorSequence& points);

enum class EntropyIntegralKind {
  tech,  ///< min{M^{1/2}, N^{1/2} M^{1/q}}
  b33,   ///< min{M^{1/2}, N^{1/2}}
};

/// Integral over (0, rho) of the chosen integrand of the effective profile,
/// computed exactly piece by piece.
double entropy_integral(const EntropyProfile& profile, double N, double q, EntropyIntegralKind kind);
double entropy_integral(const VectorSequence& points, double N, double q, EntropyIntegralKind kind);

/// sup over lambda in (0, rho) of lambda * M_lambda^{1/r}; the sup is a left
/// limit at a breakpoint.
double lambda_entropy_sup(const EntropyProfile& profile, double r);
double lambda_entropy_sup(const VectorSequence& points, double r);

}  // namespace mflab

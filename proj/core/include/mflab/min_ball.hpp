#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mflab/variation.hpp"

namespace mflab {

enum class BallMethod {
  automatic,  ///< exact when the real dimension is at most 3, iterative otherwise
  exact,      ///< Welzl recursion with circumcenters in the affine hull
  iterative,  ///< Frank-Wolfe with away steps on the dual, relative gap 1e-10
};

struct EnclosingBall {
  double radius = 0.0;
  BallMethod method = BallMethod::exact;
  std::size_t iterations = 0;
};

/// Real dimension of the points: d when every imaginary part vanishes, else 2d.
std::size_t real_dimension(const VectorSequence& seq);

/// Radius of the smallest ball of the ambient space containing the points.
EnclosingBall min_enclosing_ball(const VectorSequence& seq, BallMethod method = BallMethod::automatic);

/// Same, restricted to the points with the given indices.
EnclosingBall min_enclosing_ball(const VectorSequence& seq, std::span<const std::size_t> subset,
                                 BallMethod method = BallMethod::automatic);

}  // namespace mflab

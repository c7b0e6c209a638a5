#include "mflab/min_ball.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mflab/errors.hpp"

namespace mflab {

namespace {

using Point = std::vector<double>;

std::vector<Point> to_real(const VectorSequence& seq, std::span<const std::size_t> subset, bool drop_imag) {
  std::vector<Point> pts;
  pts.reserve(subset.size());
  for (std::size_t i : subset) {
    const auto p = seq.point(i);
    Point r;
    r.reserve(drop_imag ? p.size() : 2 * p.size());
    for (const auto& v : p) {
      r.push_back(v.real());
      if (!drop_imag) r.push_back(v.imag());
    }
    pts.push_back(std::move(r));
  }
  return pts;
}

double dist2(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t t = 0; t < a.size(); ++t) {
    const double d = a[t] - b[t];
    s += d * d;
  }
  return s;
}

struct Ball {
  Point center;
  double r2 = -1.0;  // negative: empty ball
};

// Smallest ball with every boundary point on its sphere and center in their
// affine hull.
Ball circumball(const std::vector<const Point*>& boundary) {
  Ball ball;
  if (boundary.empty()) return ball;
  const Point& p0 = *boundary.front();
  ball.center = p0;
  ball.r2 = 0.0;
  const std::size_t k = boundary.size() - 1;
  if (k == 0) return ball;

  const std::size_t dim = p0.size();
  Eigen::MatrixXd a(dim, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t t = 0; t < dim; ++t) a(t, i) = (*boundary[i + 1])[t] - p0[t];
  }
  const Eigen::MatrixXd gram = a.transpose() * a;
  const Eigen::VectorXd rhs = 0.5 * gram.diagonal();
  const Eigen::VectorXd beta = gram.completeOrthogonalDecomposition().solve(rhs);
  const Eigen::VectorXd offset = a * beta;
  for (std::size_t t = 0; t < dim; ++t) ball.center[t] += offset(static_cast<Eigen::Index>(t));
  for (const Point* p : boundary) ball.r2 = std::max(ball.r2, dist2(ball.center, *p));
  return ball;
}

bool inside(const Ball& ball, const Point& p) {
  if (ball.r2 < 0.0) return false;
  return dist2(ball.center, p) <= ball.r2 * (1.0 + 1e-12) + 1e-300;
}

class Welzl {
 public:
  Welzl(const std::vector<Point>& pts, std::size_t dim) : pts_(pts), max_boundary_(dim + 1) {}

  Ball solve() {
    std::vector<const Point*> boundary;
    return recurse(pts_.size(), boundary);
  }

 private:
  Ball recurse(std::size_t end, std::vector<const Point*>& boundary) {
    Ball ball = circumball(boundary);
    if (boundary.size() == max_boundary_) return ball;
    for (std::size_t i = 0; i < end; ++i) {
      if (inside(ball, pts_[i])) continue;
      boundary.push_back(&pts_[i]);
      ball = recurse(i, boundary);
      boundary.pop_back();
    }
    return ball;
  }

  const std::vector<Point>& pts_;
  std::size_t max_boundary_;
};

// Dual of the ball problem: maximize sum a_i |p_i|^2 - |sum a_i p_i|^2 over
// the simplex. Exact line searches for both the toward and away steps.
EnclosingBall frank_wolfe(const std::vector<Point>& pts) {
  const std::size_t n = pts.size();
  const std::size_t dim = pts.front().size();
  EnclosingBall result;
  result.method = BallMethod::iterative;

  std::vector<double> alpha(n, 0.0);
  std::size_t far = 0;
  double far_d = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = dist2(pts[0], pts[i]);
    if (d > far_d) {
      far_d = d;
      far = i;
    }
  }
  if (far_d <= 0.0) return result;
  alpha[0] += 0.5;
  alpha[far] += 0.5;

  Point center(dim, 0.0);
  std::vector<double> sq(n);
  for (std::size_t i = 0; i < n; ++i) sq[i] = dist2(pts[i], Point(dim, 0.0));

  constexpr double kTolerance = 1e-10;
  constexpr std::size_t kMaxIterations = 200000;
  double primal = 0.0;
  for (std::size_t it = 0; it < kMaxIterations; ++it) {
    std::fill(center.begin(), center.end(), 0.0);
    double weighted = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (alpha[i] == 0.0) continue;
      weighted += alpha[i] * sq[i];
      for (std::size_t t = 0; t < dim; ++t) center[t] += alpha[i] * pts[i][t];
    }
    const double dual = weighted - dist2(center, Point(dim, 0.0));

    std::size_t up = 0, down = n;
    double d_up = -1.0, d_down = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      const double d = dist2(center, pts[i]);
      if (d > d_up) {
        d_up = d;
        up = i;
      }
      if (alpha[i] > 0.0 && d < d_down) {
        d_down = d;
        down = i;
      }
    }
    primal = d_up;
    result.iterations = it + 1;
    if (dual <= 0.0 || primal - dual <= kTolerance * dual) break;

    const double delta_up = d_up / dual - 1.0;
    const double delta_down = 1.0 - d_down / dual;
    if (delta_up >= delta_down) {
      const double step = delta_up / (2.0 * (1.0 + delta_up));
      for (auto& a : alpha) a *= (1.0 - step);
      alpha[up] += step;
    } else {
      const double a_down = alpha[down];
      double step = a_down < 1.0 ? a_down / (1.0 - a_down) : std::numeric_limits<double>::infinity();
      if (d_down > 0.0) step = std::min(step, delta_down / (2.0 * (1.0 - delta_down)));
      for (auto& a : alpha) a *= (1.0 + step);
      alpha[down] -= step;
      if (alpha[down] < 1e-300) alpha[down] = 0.0;
    }
  }
  result.radius = std::sqrt(std::max(primal, 0.0));
  return result;
}

}  // namespace

std::size_t real_dimension(const VectorSequence& seq) {
  for (const auto& v : seq.data()) {
    if (v.imag() != 0.0) return 2 * seq.dim();
  }
  return seq.dim();
}

EnclosingBall min_enclosing_ball(const VectorSequence& seq, BallMethod method) {
  std::vector<std::size_t> all(seq.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return min_enclosing_ball(seq, all, method);
}

EnclosingBall min_enclosing_ball(const VectorSequence& seq, std::span<const std::size_t> subset,
                                 BallMethod method) {
  if (subset.empty()) throw DomainError("min_enclosing_ball: no points");
  if (subset.size() == 1) return {};
  const std::size_t dim = real_dimension(seq);
  const bool drop_imag = dim == seq.dim();
  if (method == BallMethod::automatic) method = dim <= 3 ? BallMethod::exact : BallMethod::iterative;

  const std::vector<Point> pts = to_real(seq, subset, drop_imag);
  if (method == BallMethod::iterative) return frank_wolfe(pts);

  Welzl solver(pts, dim);
  const Ball ball = solver.solve();
  EnclosingBall result;
  result.method = BallMethod::exact;
  result.radius = std::sqrt(std::max(ball.r2, 0.0));
  return result;
}

}  // namespace mflab

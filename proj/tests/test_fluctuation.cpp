#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "mflab/entropy.hpp"
#include "mflab/errors.hpp"
#include "mflab/io.hpp"
#include "mflab/min_ball.hpp"
#include "mflab/variation.hpp"
#include "support/oracles.hpp"

using namespace mflab;

namespace {

std::vector<cplx> random_scalars(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  std::vector<cplx> c(n);
  for (auto& v : c) v = {g(rng), g(rng)};
  return c;
}

VectorSequence to_sequence(const std::vector<oracle::Point>& pts) { return VectorSequence::real_points(pts); }

double oracle_radius(const std::vector<oracle::Point>& pts) { return oracle::min_ball_radius(pts); }

}  // namespace

TEST_CASE("variation of simple sequences") {
  const std::vector<cplx> constant(3, cplx{2.0, -1.0});
  CHECK(variation_norm(constant, 3.0, VariationMode::nonhomogeneous) == doctest::Approx(std::sqrt(5.0)));
  CHECK(variation_norm(constant, 3.0, VariationMode::homogeneous) == 0.0);
  const std::vector<double> alt{0, 1, 0, 1, 0};
  CHECK(variation_norm(VectorSequence::reals(alt), 1.0, VariationMode::homogeneous) == doctest::Approx(4.0));
  CHECK(variation_norm(VectorSequence::reals(alt), 2.0, VariationMode::homogeneous) == doctest::Approx(2.0));
}

TEST_CASE("variation rejects empty input and q below one") {
  CHECK_THROWS_AS(variation_norm(std::vector<cplx>{}, 3.0, VariationMode::homogeneous), DomainError);
  CHECK_THROWS_AS(variation_norm(std::vector<cplx>{1.0}, 0.5, VariationMode::homogeneous), DomainError);
}

TEST_CASE("dynamic programme equals exhaustive subsequence search") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 10;
    const auto c = random_scalars(rng, n);
    for (double q : {1.0, 2.5, 4.0}) {
      const double dp = variation_norm(c, q, VariationMode::homogeneous);
      CHECK(std::abs(dp - oracle::exhaustive_variation(c, q)) <= 1e-12 * std::max(1.0, dp));
      double sup = 0.0;
      for (auto v : c) sup = std::max(sup, std::abs(v));
      CHECK(variation_norm(c, q, VariationMode::nonhomogeneous) == doctest::Approx(dp + sup).epsilon(1e-14));
    }
  }
}

TEST_CASE("vector-valued variation equals exhaustive search") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 7, d = 1 + trial % 4;
    std::normal_distribution<double> g;
    std::vector<cplx> data(n * d);
    for (auto& v : data) v = {g(rng), g(rng)};
    const VectorSequence seq(d, data);
    const double ref = oracle::exhaustive_variation(n, 2.5, [&](std::size_t i, std::size_t j) { return seq.distance(i, j); });
    CHECK(variation_norm(seq, 2.5, VariationMode::homogeneous) == doctest::Approx(ref).epsilon(1e-12));
  }
}

TEST_CASE("homogeneous variation is nonincreasing in q") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = random_scalars(rng, 2 + trial % 30);
    double prev = std::numeric_limits<double>::infinity();
    for (double q : {1.0, 1.5, 2.0, 2.5, 3.0, 4.0, 8.0, 16.0}) {
      const double v = variation_norm(c, q, VariationMode::homogeneous);
      CHECK(v <= prev * (1.0 + 1e-12));
      prev = v;
    }
  }
}

TEST_CASE("symbol V^r norm") {
  const TorusGrid grid(16.0, 256);
  SpectralSymbol ind(grid);
  for (std::int64_t n = 10; n < 30; ++n) ind.at(n) = 1.0;
  CHECK(symbol_vr_norm(ind, {0, 40}, 2.0) == doctest::Approx(1.0 + std::sqrt(2.0)));
  SpectralSymbol c(grid);
  for (auto& v : c.values) v = cplx{0.0, -3.0};
  CHECK(symbol_vr_norm(c, {-20, 20}, 1.5) == doctest::Approx(3.0));

  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = random_scalars(rng, 8);
    double sup = 0.0;
    for (auto v : s) sup = std::max(sup, std::abs(v));
    for (double r : {1.0, 1.5, 2.0, 3.0}) {
      CHECK(symbol_vr_norm(s, r) == doctest::Approx(sup + oracle::exhaustive_variation(s, r)).epsilon(1e-13));
    }
  }
}

TEST_CASE("minimum enclosing ball matches support-set enumeration") {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = 1 + trial % 3, n = 1 + trial % 9;
    const auto pts = oracle::random_points(rng, n, d);
    const double ref = oracle_radius(pts);
    const auto seq = to_sequence(pts);
    CHECK(min_enclosing_ball(seq, BallMethod::exact).radius == doctest::Approx(ref).epsilon(1e-10));
    CHECK(min_enclosing_ball(seq, BallMethod::iterative).radius == doctest::Approx(ref).epsilon(1e-8));
  }
}

TEST_CASE("complex points use the iterative solver in real dimension 4") {
  const std::vector<cplx> a{{1.0, 0.0}, {0.0, 0.0}}, b{{-1.0, 0.0}, {0.0, 0.0}}, c{{0.0, 0.0}, {0.0, 1.0}};
  std::vector<cplx> data;
  for (const auto* p : {&a, &b, &c}) data.insert(data.end(), p->begin(), p->end());
  const VectorSequence seq(2, data);
  CHECK(real_dimension(seq) == 4);
  const EnclosingBall ball = min_enclosing_ball(seq);
  CHECK(ball.method == BallMethod::iterative);
  CHECK(ball.radius == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("entropy counts on three collinear points") {
  const std::vector<double> xs{0.0, 3.0, 6.0};
  const auto seq = VectorSequence::reals(xs);
  CHECK(entropy_count(seq, 1.0, EntropyMethod::exact) == 3);
  CHECK(entropy_count(seq, 3.0, EntropyMethod::exact) == 1);
  CHECK(entropy_count(seq, 1.0, EntropyMethod::greedy) == 3);
  CHECK_THROWS_AS(entropy_count(seq, 0.0, EntropyMethod::greedy), DomainError);
  CHECK_THROWS_AS(entropy_count(VectorSequence::reals(std::vector<double>(13, 1.0)), 1.0, EntropyMethod::exact),
                  SizeError);
}

TEST_CASE("exact entropy equals brute-force partition cover") {
  std::mt19937_64 rng(26);
  std::uniform_real_distribution<double> u(0.05, 2.5);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t d = 1 + trial % 3, n = 2 + trial % 6;
    const auto pts = oracle::random_points(rng, n, d);
    const auto seq = to_sequence(pts);
    for (int i = 0; i < 4; ++i) {
      const double lambda = u(rng);
      CHECK(entropy_count(seq, lambda, EntropyMethod::exact) == oracle::min_cover(pts, lambda));
    }
  }
}

TEST_CASE("greedy entropy is sandwiched by exact covers") {
  std::mt19937_64 rng(27);
  std::uniform_real_distribution<double> u(0.05, 3.0);
  const auto pts = oracle::random_points(rng, 8, 3);
  const auto seq = to_sequence(pts);
  const auto radii = oracle::insertion_radii(pts);
  for (int i = 0; i < 20; ++i) {
    const double lambda = u(rng);
    const std::size_t g = entropy_count(seq, lambda, EntropyMethod::greedy);
    CHECK(g == oracle::greedy_count(radii, lambda));
    CHECK(oracle::min_cover(pts, lambda) <= g);
    CHECK(g <= oracle::min_cover(pts, lambda / 2.0));
  }
}

TEST_CASE("entropy profile conventions") {
  std::mt19937_64 rng(28);
  const auto pts = oracle::random_points(rng, 7, 2);
  const EntropyProfile p = greedy_entropy_profile(to_sequence(pts));
  CHECK(p.radius == doctest::Approx(oracle_radius(pts)).epsilon(1e-10));
  CHECK(p.breakpoints.front() == 0.0);
  CHECK(p.breakpoints.back() == p.radius);
  for (std::size_t i = 1; i < p.counts.size(); ++i) CHECK(p.counts[i] <= p.counts[i - 1]);
  CHECK(p.count(p.radius) == 1);
  CHECK(p.count(10.0 * p.radius) == 1);
  CHECK(p.effective(p.radius) == 0);
  const auto radii = oracle::insertion_radii(pts);
  for (int i = 1; i < 500; ++i) {
    const double lambda = p.radius * i / 500.0;
    CHECK(p.effective(lambda) == oracle::greedy_count(radii, lambda));
  }
  std::ostringstream csv;
  write_entropy_profile_csv(csv, p);
  CHECK(csv.str().rfind("lambda,count\n", 0) == 0);
}

TEST_CASE("entropy integral closed forms") {
  CHECK(entropy_integral(VectorSequence::reals(std::vector<double>{1.0}), 4.0, 3.0, EntropyIntegralKind::tech) == 0.0);
  const auto two = VectorSequence::reals(std::vector<double>{0.0, 4.0});
  CHECK(entropy_integral(two, 2.0, 4.0, EntropyIntegralKind::tech) == doctest::Approx(2.0 * std::sqrt(2.0)));
  CHECK(entropy_integral(two, 1.0, 4.0, EntropyIntegralKind::b33) == doctest::Approx(2.0));
  CHECK_THROWS_AS(entropy_integral(two, 2.0, 2.0, EntropyIntegralKind::tech), DomainError);
  CHECK_THROWS_AS(entropy_integral(two, 0.5, 3.0, EntropyIntegralKind::tech), DomainError);
}

TEST_CASE("entropy integral equals a fine Riemann sum") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 6; ++trial) {
    const auto pts = oracle::random_points(rng, 6, 1 + trial % 3);
    const auto radii = oracle::insertion_radii(pts);
    const double rho = oracle_radius(pts);
    const double N = 1.0 + trial * 3.0, q = 2.5 + trial;
    for (auto kind : {EntropyIntegralKind::tech, EntropyIntegralKind::b33}) {
      const int nodes = 100000;
      double sum = 0.0;
      for (int i = 0; i < nodes; ++i) {
        const double lambda = rho * (i + 0.5) / nodes;
        const double M = static_cast<double>(oracle::greedy_count(radii, lambda));
        const double cap = kind == EntropyIntegralKind::tech ? std::sqrt(N) * std::pow(M, 1.0 / q) : std::sqrt(N);
        sum += std::min(std::sqrt(M), cap);
      }
      sum *= rho / nodes;
      CHECK(entropy_integral(to_sequence(pts), N, q, kind) == doctest::Approx(sum).epsilon(1e-4));
    }
  }
}

TEST_CASE("b33 integral is dominated by the tech integral and is its large-q limit") {
  std::mt19937_64 rng(30);
  for (int trial = 0; trial < 50; ++trial) {
    const auto seq = to_sequence(oracle::random_points(rng, 2 + trial % 9, 1 + trial % 3));
    const double N = 1.0 + trial % 17;
    const double b = entropy_integral(seq, N, 3.0, EntropyIntegralKind::b33);
    CHECK(b <= entropy_integral(seq, N, 3.0, EntropyIntegralKind::tech) * (1.0 + 1e-12));
    CHECK(entropy_integral(seq, N, 1e9, EntropyIntegralKind::tech) == doctest::Approx(b).epsilon(1e-6));
  }
}

TEST_CASE("lambda entropy supremum") {
  CHECK(lambda_entropy_sup(VectorSequence::reals(std::vector<double>{2.0}), 3.0) == 0.0);
  for (double d : {0.5, 1.0, 7.0}) {
    for (double r : {2.5, 3.0, 6.0}) {
      CHECK(lambda_entropy_sup(VectorSequence::reals(std::vector<double>{0.0, d}), r) ==
            doctest::Approx(d / 2.0 * std::pow(2.0, 1.0 / r)));
    }
  }
  CHECK_THROWS_AS(lambda_entropy_sup(VectorSequence::reals(std::vector<double>{0.0, 1.0}), 2.0), DomainError);
}

TEST_CASE("lambda entropy supremum equals a dense lambda grid") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 3; ++trial) {
    const auto pts = oracle::random_points(rng, 6, 2);
    const auto radii = oracle::insertion_radii(pts);
    const double rho = oracle_radius(pts);
    const double r = 3.0;
    const int G = 10000000;
    double best = 0.0;
    for (int i = 1; i < G; ++i) {
      const double lambda = rho * i / G;
      best = std::max(best, lambda * std::pow(static_cast<double>(oracle::greedy_count(radii, lambda)), 1.0 / r));
    }
    CHECK(lambda_entropy_sup(to_sequence(pts), r) == doctest::Approx(best).epsilon(1e-6));
  }
}

TEST_CASE("lambda M^(1/q) is bounded by twice the homogeneous variation") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 500; ++trial) {
    const auto c = random_scalars(rng, 2 + trial % 40);
    const double q = 2.5 + (trial % 4) * 0.5;
    const double v = variation_norm(c, q, VariationMode::homogeneous);
    const EntropyProfile p = greedy_entropy_profile(VectorSequence::scalars(c));
    for (std::size_t i = 0; i < p.counts.size(); ++i) {
      const double lambda = p.breakpoints[i + 1];
      CHECK(lambda * std::pow(static_cast<double>(p.counts[i]), 1.0 / q) <= 2.0 * v * (1.0 + 1e-12));
    }
  }
}

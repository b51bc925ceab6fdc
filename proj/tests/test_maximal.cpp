#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lagsob/lagsob.hpp"

using namespace lagsob;

namespace {

// Oracle: brute-force counting-measure mean over the closed ball, clipped to the grid.
double ball_mean(const SampledField& u, std::size_t centre, double r) {
  const auto& g = u.grid();
  const Point c = g.point(centre);
  double s = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (distance(g.point(i), c) <= r * (1.0 + 1e-12)) {
      s += u[i];
      ++count;
    }
  return s / static_cast<double>(count);
}

SampledField random_field(const GridSpec& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(0.0, 1.0);
  std::vector<double> v(g.size());
  for (auto& x : v) x = d(rng);
  return SampledField(g, v);
}

}  // namespace

TEST(BallVolume, Examples) {
  EXPECT_EQ(ball_volume(1, 1.0), 2.0);
  EXPECT_EQ(ball_volume(2, 1.0), std::numbers::pi);
  EXPECT_NEAR(ball_volume(3, 2.0), 32.0 * std::numbers::pi / 3.0, 1e-12);
  EXPECT_NEAR(ball_volume(4, 1.0), std::numbers::pi * std::numbers::pi / 2.0, 1e-13);
  EXPECT_NEAR(ball_volume(5, 1.0), 8.0 * std::numbers::pi * std::numbers::pi / 15.0, 1e-13);
}

TEST(LensVolume, Examples) {
  EXPECT_EQ(lens_volume(1, 1.0, 1.0), 1.0);
  EXPECT_NEAR(lens_volume(3, 1.0, 1.0), 5.0 * std::numbers::pi / 12.0, 1e-15);
  EXPECT_NEAR(lens_volume(2, 1.0, 1.0), 2.0 * std::numbers::pi / 3.0 - std::sqrt(3.0) / 2.0, 1e-15);
  EXPECT_THROW(lens_volume(2, 0.0, 1.0), argument_error);
  EXPECT_THROW(lens_volume(2, -1.0, 1.0), argument_error);
}

TEST(LensVolume, MonotoneInDistanceAndVanishesAtTwoR) {
  for (int n = 1; n <= 5; ++n) {
    double prev = ball_volume(n, 1.5);
    for (int k = 1; k <= 60; ++k) {
      const double d = 3.0 * k / 60.0;
      const double v = lens_volume(n, 1.5, d);
      EXPECT_LT(v, prev) << "n=" << n << " d=" << d;
      EXPECT_LE(v, ball_volume(n, 1.5));
      prev = v;
    }
    EXPECT_EQ(lens_volume(n, 1.5, 3.0), 0.0);
  }
}

TEST(LensVolume, QuadratureMatchesClosedForms) {
  for (int n = 1; n <= 3; ++n)
    for (double d : {0.1, 0.7, 1.0, 1.6, 1.99})
      EXPECT_NEAR(lens_volume_quadrature(n, 1.0, d), lens_volume(n, 1.0, d), 1e-6 * lens_volume(n, 1.0, d));
}

TEST(LensVolume, FourDimensionalClosedForm) {
  // Two caps, each V_3 * int_{d/2}^1 (1 - z^2)^{3/2} dz, with the
  // antiderivative z(5 - 2z^2)sqrt(1 - z^2)/8 + 3/8 asin z.
  const double a = 0.5;
  auto prim = [](double z) { return z * (5 - 2 * z * z) * std::sqrt(1 - z * z) / 8 + 3.0 / 8 * std::asin(z); };
  const double expect = 2.0 * ball_volume(3, 1.0) * (prim(1.0) - prim(a));
  EXPECT_NEAR(lens_volume(4, 1.0, 1.0), expect, 1e-12);
}

TEST(SegmentRatio, Examples) {
  EXPECT_EQ(segment_ratio_constant(1), 2.0);
  EXPECT_NEAR(segment_ratio_constant(3), 3.2, 1e-12);
  EXPECT_NEAR(segment_ratio_constant(2), std::numbers::pi / (2 * std::numbers::pi / 3 - std::sqrt(3.0) / 2), 1e-14);
  EXPECT_NEAR(segment_ratio_constant(2), 2.5575, 1e-4);
}

TEST(SegmentRatio, ScaleInvarianceAndGrowth) {
  double prev = 1.0;
  for (int n = 1; n <= 5; ++n) {
    const double c1 = ball_volume(n, 1.0) / lens_volume(n, 1.0, 1.0);
    const double c2 = ball_volume(n, 2.0) / lens_volume(n, 2.0, 2.0);
    EXPECT_NEAR(c1, c2, 1e-12 * c1);
    const double cq = ball_volume(n, 1.0) / lens_volume_quadrature(n, 1.0, 1.0);
    EXPECT_GE(cq, 1.0);
    EXPECT_GT(cq, prev);
    prev = cq;
  }
}

TEST(SegmentRatio, TwoDimensionalMonteCarlo) {
  // Stratified sampling of the lens bounding box [0,1] x [-h,h], h = sqrt(3)/2.
  const double h = std::sqrt(3.0) / 2.0;
  const int cells = 1000;
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  long hits = 0;
  for (int i = 0; i < cells; ++i)
    for (int j = 0; j < cells; ++j) {
      const double x = (i + u(rng)) / cells, y = -h + 2 * h * (j + u(rng)) / cells;
      if (x * x + y * y <= 1.0 && (x - 1) * (x - 1) + y * y <= 1.0) ++hits;
    }
  const double lens = 2.0 * h * static_cast<double>(hits) / (static_cast<double>(cells) * cells);
  EXPECT_NEAR(segment_ratio_constant(2), std::numbers::pi / lens, 1e-3);
}

TEST(MaximalConfigTest, GeometricRadii) {
  const auto cfg = MaximalConfig::geometric(0.4, 0.02, 8);
  ASSERT_EQ(cfg.radii.size(), 8u);
  EXPECT_DOUBLE_EQ(cfg.radii.front(), 0.02);
  EXPECT_EQ(cfg.radii.back(), 0.4);
  for (std::size_t i = 1; i < 8; ++i) EXPECT_NEAR(cfg.radii[i] / cfg.radii[i - 1], std::pow(20.0, 1.0 / 7.0), 1e-12);
  EXPECT_THROW(MaximalConfig::geometric(0.01, 0.02), config_error);
  EXPECT_THROW((MaximalConfig{0.1, {0.05, 0.2}}.validate()), config_error);
  EXPECT_THROW((MaximalConfig{0.1, {0.05, 0.04}}.validate()), config_error);
  EXPECT_THROW((MaximalConfig{0.1, {}}.validate()), config_error);
}

TEST(LocalMaximal, ConstantIsFixed) {
  const auto g = GridSpec::cube(2, -1.0, 1.0, 41);
  const SampledField u(g, std::vector<double>(g.size(), 2.5));
  const auto m = local_maximal_function(u, MaximalConfig::for_grid(g, 0.4));
  for (double v : m.values()) EXPECT_NEAR(v, 2.5, 1e-14);
}

TEST(LocalMaximal, AbsoluteValueAtOrigin) {
  const double delta = 0.5;
  const auto g = GridSpec::cube(1, -1.0, 1.0, 201);  // spacing 0.01 <= delta / 50
  const auto u = sample(parse_field("pow:alpha=1,c=5"), g).transformed([](double v) { return std::abs(v - 5.0); });
  const auto m = local_maximal_function(u, MaximalConfig::for_grid(g, delta));
  EXPECT_NEAR(m[100], delta / 2, 0.05 * delta / 2);
}

TEST(LocalMaximal, SinglePointSpike) {
  const auto g = GridSpec::cube(1, 0.0, 1.0, 101);
  std::vector<double> v(g.size(), 0.0);
  v[50] = 1.0;
  const auto cfg = MaximalConfig::for_grid(g, 0.2, 4);
  const auto m = local_maximal_function(SampledField(g, v), cfg);
  double expect = 0.0;
  for (double r : cfg.radii) {
    const double pts = 2.0 * std::floor(r / g.spacing(0) + 1e-9) + 1.0;
    expect = std::max(expect, 1.0 / pts);
  }
  EXPECT_DOUBLE_EQ(m[50], expect);
}

TEST(LocalMaximal, MatchesBruteForceOracle) {
  const GridSpec g({-1.0, 0.0}, {1.0, 1.0}, {21, 13});
  const auto u = random_field(g, 4);
  const MaximalConfig cfg{0.35, {0.1, 0.2, 0.35}};
  const auto m = local_maximal_function(u, cfg, 2);
  for (std::size_t i = 0; i < g.size(); ++i) {
    double best = 0.0;
    for (double r : cfg.radii) best = std::max(best, ball_mean(u, i, r));
    EXPECT_NEAR(m[i], best, 1e-13);
    EXPECT_GE(m[i] + 1e-13, ball_mean(u, i, cfg.delta));
  }
}

TEST(LocalMaximal, SublinearAndPositivelyHomogeneous) {
  const auto g = GridSpec::cube(2, 0.0, 1.0, 31);
  const auto u = random_field(g, 5), v = random_field(g, 6);
  const auto cfg = MaximalConfig::for_grid(g, 0.3);
  std::vector<double> sum(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) sum[i] = u[i] + v[i];
  const auto mu = local_maximal_function(u, cfg), mv = local_maximal_function(v, cfg);
  const auto ms = local_maximal_function(SampledField(g, sum), cfg);
  const auto mc = local_maximal_function(u.scaled(3.0), cfg);
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_LE(ms[i], mu[i] + mv[i] + 1e-13);
    EXPECT_NEAR(mc[i], 3.0 * mu[i], 1e-13);
  }
}

TEST(LocalMaximal, RadiusBelowSpacingThrows) {
  const auto g = GridSpec::cube(1, 0.0, 1.0, 11);
  const SampledField u(g, std::vector<double>(g.size(), 1.0));
  EXPECT_THROW(local_maximal_function(u, MaximalConfig{0.3, {0.05, 0.3}}), config_error);
}

TEST(LocalMaximal, ThreeDimensional) {
  const auto g = GridSpec::cube(3, 0.0, 1.0, 9);
  const auto u = random_field(g, 7);
  const MaximalConfig cfg{0.3, {0.15, 0.3}};
  const auto m = local_maximal_function(u, cfg);
  for (std::size_t i = 0; i < g.size(); i += 7)
    EXPECT_NEAR(m[i], std::max(ball_mean(u, i, 0.15), ball_mean(u, i, 0.3)), 1e-13);
}

TEST(MeanMaximalGradient, Examples) {
  const auto g = GridSpec::cube(1, -1.0, 1.0, 101);
  const auto cfg = MaximalConfig::for_grid(g, 0.2);
  const auto lin = mean_maximal_gradient(parse_field("poly:-3*x0"), g, cfg, 1, default_directions(1));
  for (double v : lin.values()) EXPECT_NEAR(v, 6.0, 1e-13);
  const auto sq = mean_maximal_gradient(parse_field("poly:x0^2"), g, cfg, 2, default_directions(1));
  for (double v : sq.values()) EXPECT_NEAR(v, 4.0, 1e-13);
  const auto c = mean_maximal_gradient(parse_field("poly:7"), g, cfg, 1, default_directions(1));
  for (double v : c.values()) EXPECT_EQ(v, 0.0);
}

TEST(MeanMaximalGradient, Nonnegative) {
  const auto g = GridSpec::cube(2, -1.0, 1.0, 41);
  const auto cfg = MaximalConfig::for_grid(g, 0.3);
  const auto f = parse_field("sin:w=3,2", 2);
  const auto a = mean_maximal_gradient(f, g, cfg, 1, default_directions(2));
  for (double v : a.values()) EXPECT_GE(v, 0.0);
}

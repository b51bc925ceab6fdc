#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lagsob/lagsob.hpp"

using namespace lagsob;

namespace {

AnalyticField poly(const std::string& s, std::size_t n = 0) { return parse_field("poly:" + s, n); }

}  // namespace

TEST(Eval, PolynomialSquareAtThree) { EXPECT_EQ(eval(poly("x0^2"), {3.0}), 9.0); }

TEST(Eval, GaussianAtOrigin) { EXPECT_EQ(eval(AnalyticField::gaussian(2, 1.0), {0.0, 0.0}), 1.0); }

TEST(Eval, PowerThreeFour) { EXPECT_NEAR(eval(AnalyticField::power(2, 2.0), {3.0, 4.0}), 25.0, 1e-12); }

TEST(Eval, SinusoidProduct) {
  const auto f = AnalyticField::sinusoid({3.0, 2.0});
  EXPECT_NEAR(eval(f, {0.3, -0.7}), std::sin(0.9) * std::sin(-1.4), 1e-15);
}

TEST(Eval, OutsideRestrictedBoxThrows) {
  const auto f = poly("x0").restricted_to(Box::cube(1, 0.0, 1.0));
  EXPECT_THROW(eval(f, {1.5}), domain_error);
  EXPECT_NO_THROW(eval(f, {1.0}));
}

TEST(Eval, PowerExcludesNeighbourhoodOfCentre) {
  const auto f = AnalyticField::power(1, 1.5);
  EXPECT_THROW(eval(f, {0.01}), domain_error);
  EXPECT_NO_THROW(eval(f, {0.2}));
  const auto g = AnalyticField::power(1, 1.5, {2.0});
  EXPECT_NO_THROW(eval(g, {0.0}));
  EXPECT_THROW(eval(g, {2.01}), domain_error);
}

TEST(Eval, WrongDimensionThrows) { EXPECT_THROW(eval(AnalyticField::gaussian(2, 1.0), {0.0}), argument_error); }

TEST(Eval, ExactRationalEvaluation) {
  const auto f = poly("1/3*x0^2-x1", 2);
  const Rational v = eval_exact(f, {Rational(3), Rational(1, 2)});
  EXPECT_EQ(v, Rational(5, 2));
  EXPECT_THROW(eval_exact(AnalyticField::gaussian(1, 1.0), {Rational(0)}), argument_error);
}

TEST(DirectionalDerivative, CubicThirdDerivative) {
  const auto f = poly("x0^3");
  for (double t : {-1.0, 0.0, 0.7}) EXPECT_EQ(directional_derivative(f, {0.0}, {1.0}, 3, t), 6.0);
}

TEST(DirectionalDerivative, SquareAlongScaledStep) {
  EXPECT_EQ(directional_derivative(poly("x0^2"), {0.0}, {2.0}, 1, 1.0), 8.0);
}

TEST(DirectionalDerivative, GaussianOddDerivativeAtPeak) {
  EXPECT_EQ(directional_derivative(AnalyticField::gaussian(1, 1.0), {0.0}, {1.0}, 1, 0.0), 0.0);
}

TEST(DirectionalDerivative, AboveMaxOrderThrows) {
  const auto f = AnalyticField::gaussian(1, 1.0).with_max_order(3);
  EXPECT_NO_THROW(directional_derivative(f, {0.1}, {1.0}, 3, 0.0));
  EXPECT_THROW(directional_derivative(f, {0.1}, {1.0}, 4, 0.0), unsupported_order);
}

TEST(DirectionalDerivative, AboveDegreeIsExactlyZero) {
  const auto f = poly("x0^3*x1-2*x1^2+x0", 2);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int k = 0; k < 50; ++k)
    for (int l = 5; l <= 8; ++l)
      EXPECT_EQ(directional_derivative(f, {u(rng), u(rng)}, {u(rng), u(rng)}, l, u(rng)), 0.0);
}

// Independent oracles: central finite differences of high order on the
// closed-form line restriction, and hand-derived derivatives.
TEST(DirectionalDerivative, GaussianMatchesHandDerivatives) {
  const double a = 0.7;
  const auto f = AnalyticField::gaussian(1, a);
  for (double s : {-0.9, -0.2, 0.4, 1.3}) {
    const double e = std::exp(-a * s * s);
    EXPECT_NEAR(directional_derivative(f, {s}, {1.0}, 1, 0.0), -2 * a * s * e, 1e-14);
    EXPECT_NEAR(directional_derivative(f, {s}, {1.0}, 2, 0.0), (4 * a * a * s * s - 2 * a) * e, 1e-13);
    EXPECT_NEAR(directional_derivative(f, {s}, {1.0}, 3, 0.0), (-8 * a * a * a * s * s * s + 12 * a * a * s) * e, 1e-12);
  }
}

TEST(DirectionalDerivative, PowerMatchesHandDerivatives) {
  const double alpha = 2.5;
  const auto f = AnalyticField::power(1, alpha);
  for (double s : {0.3, 0.8, 1.7}) {
    EXPECT_NEAR(directional_derivative(f, {s}, {1.0}, 1, 0.0), alpha * std::pow(s, alpha - 1), 1e-12);
    EXPECT_NEAR(directional_derivative(f, {s}, {1.0}, 2, 0.0), alpha * (alpha - 1) * std::pow(s, alpha - 2), 1e-12);
    EXPECT_NEAR(directional_derivative(f, {s}, {1.0}, 3, 0.0),
                alpha * (alpha - 1) * (alpha - 2) * std::pow(s, alpha - 3), 1e-11);
  }
}

TEST(DirectionalDerivative, PowerInTwoDimensionsAlongRadius) {
  // Along the ray x = s e with |e| = 1, |x|^alpha restricts to s^alpha.
  const auto f = AnalyticField::power(2, 1.5);
  const Point e{0.6, 0.8};
  EXPECT_NEAR(directional_derivative(f, {0.6, 0.8}, e, 2, 0.0), 1.5 * 0.5, 1e-13);
}

TEST(DirectionalDerivative, SinusoidMatchesHandDerivatives) {
  const auto f = AnalyticField::sinusoid({3.0, 2.0});
  const Point x{0.2, -0.4}, h{0.5, 1.0};
  // g(s) = sin(0.6 + 1.5 s) sin(-0.8 + 2 s)
  auto g = [](int l, double s) {
    const double a = 0.6 + 1.5 * s, b = -0.8 + 2 * s;
    if (l == 1) return 1.5 * std::cos(a) * std::sin(b) + 2 * std::sin(a) * std::cos(b);
    return -2.25 * std::sin(a) * std::sin(b) + 2 * 3.0 * std::cos(a) * std::cos(b) - 4 * std::sin(a) * std::sin(b);
  };
  for (double t : {0.0, 0.3}) {
    EXPECT_NEAR(directional_derivative(f, x, h, 1, t), g(1, t), 1e-14);
    EXPECT_NEAR(directional_derivative(f, x, h, 2, t), g(2, t), 1e-13);
  }
}

TEST(DirectionalDerivative, HomogeneousOfDegreeLInStep) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-0.5, 0.5), cdist(0.2, 3.0);
  const std::vector<AnalyticField> fields{parse_field("poly:1+2*x0^2*x1", 2), parse_field("gauss:a=1", 2),
                                          parse_field("pow:alpha=1.5,c=2", 2), parse_field("sin:w=3,2", 2)};
  for (const auto& f : fields) {
    for (int k = 0; k < 40; ++k) {
      const Point x{u(rng), u(rng)}, h{u(rng), u(rng)};
      const double c = cdist(rng);
      for (int l = 0; l <= 4; ++l) {
        const double base = directional_derivative(f, x, h, l, 0.0);
        const double scaled = directional_derivative(f, x, c * h, l, 0.0);
        EXPECT_NEAR(scaled, std::pow(c, l) * base, 1e-12 * (1.0 + std::abs(scaled))) << f.name() << " l=" << l;
      }
    }
  }
}

TEST(Sample, ConstantField) {
  const auto s = sample(AnalyticField::constant(2, Rational(1)), GridSpec::cube(2, -1.0, 1.0, 5));
  for (double v : s.values()) EXPECT_EQ(v, 1.0);
}

TEST(Sample, LinearOnUnitInterval) {
  const auto s = sample(poly("x0"), GridSpec::cube(1, 0.0, 1.0, 3));
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0], 0.0);
  EXPECT_EQ(s[1], 0.5);
  EXPECT_EQ(s[2], 1.0);
}

TEST(Sample, AbsTransformOfNonnegativeField) {
  const auto g = GridSpec::cube(1, 0.0, 1.0, 11);
  const auto a = sample(poly("x0^2"), g);
  const auto b = sample(poly("x0^2"), g, [](double v) { return std::abs(v); });
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
}

TEST(Sample, ReadBackReproducesEval) {
  const auto f = parse_field("sin:w=3,2", 2);
  const GridSpec g({-1.0, 0.0}, {1.0, 2.0}, {7, 9});
  const auto s = sample(f, g, {}, 3);
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_EQ(s[i], eval(f, g.point(i)));
    EXPECT_EQ(s.interpolate(g.point(i)), s[i]);
  }
}

TEST(GradientMagnitude, LinearOneDimensional) {
  const auto s = gradient_magnitude_field(poly("3*x0"), GridSpec::cube(1, -1.0, 1.0, 9), 1, default_directions(1));
  for (double v : s.values()) EXPECT_EQ(v, 3.0);
}

TEST(GradientMagnitude, AxisDirectionsForCoordinateFunction) {
  const std::vector<Point> axes{{1.0, 0.0}, {0.0, 1.0}};
  const auto s = gradient_magnitude_field(poly("x0", 2), GridSpec::cube(2, -1.0, 1.0, 5), 1, axes);
  for (double v : s.values()) EXPECT_EQ(v, 1.0);
}

TEST(GradientMagnitude, SecondDerivativeOfSquare) {
  const auto s = gradient_magnitude_field(poly("x0^2"), GridSpec::cube(1, 0.0, 1.0, 11), 2, default_directions(1));
  for (double v : s.values()) EXPECT_EQ(v, 2.0);
}

TEST(GradientMagnitude, DirectionSetErrors) {
  const auto g = GridSpec::cube(1, 0.0, 1.0, 3);
  EXPECT_THROW(gradient_magnitude_field(poly("x0"), g, 1, {}), config_error);
  EXPECT_THROW(gradient_magnitude_field(poly("x0"), g, 1, {Point{2.0}}), config_error);
}

TEST(GradientMagnitude, DefaultDirectionsAreUnitAndDistinct) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto dirs = default_directions(n);
    for (const auto& e : dirs) EXPECT_NEAR(norm(e), 1.0, 1e-15);
    for (std::size_t i = 0; i < dirs.size(); ++i)
      for (std::size_t j = i + 1; j < dirs.size(); ++j) EXPECT_GT(distance(dirs[i], dirs[j]), 1e-6);
  }
  EXPECT_EQ(default_directions(1).size(), 1u);
  EXPECT_EQ(default_directions(2).size(), 64u);
  EXPECT_EQ(default_directions(3).size(), 13u);
}

TEST(GradientMagnitude, TwoDimensionalGradientNormOfLinearField) {
  // |grad <c,x>| = |c| is attained within the angular resolution pi/128.
  const auto s = gradient_magnitude_field(poly("3*x0+4*x1", 2), GridSpec::cube(2, -1.0, 1.0, 3), 1, default_directions(2));
  for (double v : s.values()) {
    EXPECT_LE(v, 5.0 + 1e-12);
    EXPECT_GE(v, 5.0 * std::cos(std::numbers::pi / 128));
  }
}

TEST(Grid, DerivedQuantities) {
  const GridSpec g({-1.0, 0.0}, {1.0, 3.0}, {5, 4});
  EXPECT_EQ(g.size(), 20u);
  EXPECT_EQ(g.spacing(0), 0.5);
  EXPECT_EQ(g.spacing(1), 1.0);
  EXPECT_EQ(g.coordinate(1, 3), 3.0);
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_EQ(g.flatten(g.unflatten(i)), i);
  EXPECT_EQ(g.point(1), (Point{-1.0, 1.0}));  // last axis fastest
}

TEST(Grid, InvalidSpecsThrow) {
  EXPECT_THROW(GridSpec({1.0}, {0.0}, {5}), argument_error);
  EXPECT_THROW(GridSpec({0.0}, {1.0}, {1}), argument_error);
  EXPECT_THROW(GridSpec({0.0, 0.0}, {1.0}, {3}), argument_error);
}

TEST(SampledFieldTest, ValueCountAndFiniteness) {
  const auto g = GridSpec::cube(1, 0.0, 1.0, 3);
  EXPECT_THROW(SampledField(g, {1.0, 2.0}), argument_error);
  EXPECT_THROW(SampledField(g, {1.0, NAN, 2.0}), argument_error);
}

TEST(SampledFieldTest, MultilinearInterpolationIsExactForBilinear) {
  const auto f = poly("1+x0-2*x1+3*x0*x1", 2);
  const auto s = sample(f, GridSpec::cube(2, -1.0, 1.0, 5));
  for (const Point& x : {Point{0.13, -0.71}, Point{-1.0, 1.0}, Point{0.99, 0.01}})
    EXPECT_NEAR(s.interpolate(x), eval(f, x), 1e-14);
  EXPECT_THROW(s.interpolate({1.5, 0.0}), domain_error);
  EXPECT_NEAR(s.interpolate({0.1, 0.1}, Interpolation::nearest), eval(f, {0.0, 0.0}), 1e-15);
}

TEST(Parse, Grammar) {
  const auto p = parse_field("poly:1+2*x0^2*x1");
  EXPECT_EQ(p.dimension(), 2u);
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(eval(p, {2.0, 3.0}), 25.0);
  EXPECT_EQ(parse_field("poly:x2", 0).dimension(), 3u);
  EXPECT_EQ(eval(parse_field("poly:-x0^2+0.25"), {1.0}), -0.75);
  EXPECT_EQ(parse_field("gauss:a=1", 3).dimension(), 3u);
  EXPECT_EQ(parse_field("sin:w=3,2").dimension(), 2u);
  EXPECT_EQ(parse_field("sin:w=3", 2).dimension(), 2u);
  EXPECT_NEAR(eval(parse_field("gauss:a=1,amp=2"), {0.0}), 2.0, 0.0);
  EXPECT_NEAR(eval(parse_field("pow:alpha=2,c=1"), {3.0}), 4.0, 1e-14);
  EXPECT_EQ(parse_field("gauss:a=1").name(), "gauss:a=1");
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_field("bogus"), parse_error);
  EXPECT_THROW(parse_field("cubic:a=1"), parse_error);
  EXPECT_THROW(parse_field("poly:x0^"), parse_error);
  EXPECT_THROW(parse_field("poly:x3", 2), parse_error);
  EXPECT_THROW(parse_field("gauss:b=1"), parse_error);
  EXPECT_THROW(parse_field("sin:w=1,2,3", 2), parse_error);
  EXPECT_THROW(parse_field("poly:1/0"), parse_error);
  EXPECT_THROW(parse_field("gauss:a=-1"), argument_error);
}

TEST(Parse, DefaultCorporaParse) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& spec : default_corpus(n)) EXPECT_EQ(parse_field(spec, n).dimension(), n) << spec;
}

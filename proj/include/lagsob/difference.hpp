#pragma once

// Finite differences, equidistant Lagrange interpolation and its remainder,
// Taylor remainders, and the finite-sum / iterated-integral forms of the
// functions g_h^l together with their telescoping identity.
//
// Sign conventions:
//   forward_difference  D_h^l f(x) = sum_j (-1)^(l-j) C(l,j) f(x+jh)
//   g_sum               sum_j (-1)^j C(l,j) f(x+jh)          = (-1)^l D_h^l f(x)
//   g_integral          int_[0,1]^l f^(l)-along-h(x + (t_1+..+t_l)h) dt = D_h^l f(x)
// All interpolation arithmetic is done in the line coordinate s of x + s*h.

#include <array>
#include <atomic>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include "lagsob/errors.hpp"
#include "lagsob/field.hpp"
#include "lagsob/point.hpp"
#include "lagsob/quadrature.hpp"

namespace lagsob {

/// Anything that maps a point to a real value (AnalyticField, SampledField, lambdas).
template <class F>
concept PointFunction = requires(const F& f, const Point& x) {
  { f(x) } -> std::convertible_to<double>;
};

inline constexpr int kMaxBinomialRow = 60;

namespace detail {

inline const std::array<std::array<std::int64_t, kMaxBinomialRow + 1>, kMaxBinomialRow + 1>& pascal_triangle() {
  static const auto table = [] {
    std::array<std::array<std::int64_t, kMaxBinomialRow + 1>, kMaxBinomialRow + 1> t{};
    for (int l = 0; l <= kMaxBinomialRow; ++l) {
      t[l][0] = t[l][l] = 1;
      for (int j = 1; j < l; ++j) t[l][j] = t[l - 1][j - 1] + t[l - 1][j];
    }
    return t;
  }();
  return table;
}

struct BinomialCorruption {
  std::atomic<int> row{-1};
  std::atomic<int> column{-1};
  std::atomic<std::int64_t> delta{0};
};

inline BinomialCorruption& binomial_corruption() {
  static BinomialCorruption c;
  return c;
}

}  // namespace detail

/// Negative-control hooks for the identity suite. Not for production use.
namespace testing_hooks {

/// Makes binomial(l, j) return the true value plus `delta` until restored.
inline void corrupt_binomial(int l, int j, std::int64_t delta) {
  auto& c = detail::binomial_corruption();
  c.delta = delta;
  c.column = j;
  c.row = l;
}

inline void restore_binomial() { detail::binomial_corruption().row = -1; }

}  // namespace testing_hooks

inline std::int64_t binomial(int l, int j) {
  if (l < 0 || l > kMaxBinomialRow) throw argument_error("binomial: row " + std::to_string(l) + " out of range");
  if (j < 0 || j > l) throw argument_error("binomial: C(" + std::to_string(l) + "," + std::to_string(j) + ") undefined");
  const auto& c = detail::binomial_corruption();
  std::int64_t v = detail::pascal_triangle()[l][j];
  if (c.row.load() == l && c.column.load() == j) v += c.delta.load();
  return v;
}

/// Equidistant colinear nodes x_j = base + j*step, j = 0..count-1.
struct NodeFamily {
  Point base;
  Point step;
  int count = 0;

  Point node(int j) const { return along(base, step, static_cast<double>(j)); }

  /// The l+1 nodes x, x+h, ..., y of the remainder at y, with h = (y-x)/l.
  static NodeFamily spanning(const Point& x, const Point& y, int l) {
    require_same_dimension(x, y, "NodeFamily::spanning");
    if (l < 1) throw argument_error("NodeFamily::spanning: l must be at least 1");
    return NodeFamily{x, (1.0 / l) * (y - x), l + 1};
  }
};

namespace detail {

inline void require_order(int l, const char* what) {
  if (l < 0) throw argument_error(std::string(what) + ": order must be nonnegative");
  if (l > kMaxBinomialRow) throw argument_error(std::string(what) + ": order too large");
}

inline double sign_pow(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

}  // namespace detail

/// l-th forward difference; l = 0 gives f(x), h = 0 gives 0.
template <PointFunction F>
double forward_difference(const F& f, const Point& x, const Point& h, int l) {
  require_same_dimension(x, h, "forward_difference");
  detail::require_order(l, "forward_difference");
  if (l == 0) return f(x);
  if (is_zero(h)) return 0.0;
  double s = 0.0;
  for (int j = 0; j <= l; ++j)
    s += detail::sign_pow(l - j) * static_cast<double>(binomial(l, j)) * f(along(x, h, static_cast<double>(j)));
  return s;
}

/// Forward difference of a polynomial field in exact arithmetic.
inline Rational forward_difference_exact(const AnalyticField& f, const std::vector<Rational>& x,
                                         const std::vector<Rational>& h, int l) {
  detail::require_order(l, "forward_difference_exact");
  if (x.size() != h.size()) throw argument_error("forward_difference_exact: dimension mismatch");
  Rational s(0);
  for (int j = 0; j <= l; ++j) {
    std::vector<Rational> node(x.size());
    for (std::size_t a = 0; a < x.size(); ++a) node[a] = x[a] + Rational(j) * h[a];
    s += Rational(((l - j) % 2 ? -1 : 1) * binomial(l, j)) * eval_exact(f, node);
  }
  return s;
}

/// Fundamental Lagrange polynomial l_j at line coordinate y for the nodes
/// s = 0, 1, ..., count-1 of the family.
inline double lagrange_basis(int j, double y, const NodeFamily& nodes) {
  if (nodes.count < 1) throw argument_error("lagrange_basis: empty node family");
  if (j < 0 || j >= nodes.count) throw argument_error("lagrange_basis: index out of range");
  if (nodes.count > 1 && is_zero(nodes.step)) throw degenerate_nodes("lagrange_basis: coincident nodes (h = 0)");
  double num = 1.0, den = 1.0;
  for (int i = 0; i < nodes.count; ++i) {
    if (i == j) continue;
    num *= y - i;
    den *= static_cast<double>(j - i);
  }
  return num / den;
}

/// Line coordinate s with y = base + s*step; throws if y is off the line.
inline double line_coordinate(const NodeFamily& nodes, const Point& y) {
  require_same_dimension(nodes.base, y, "line_coordinate");
  const double hh = dot(nodes.step, nodes.step);
  if (hh == 0.0) throw degenerate_nodes("line_coordinate: coincident nodes (h = 0)");
  const Point d = y - nodes.base;
  const double s = dot(d, nodes.step) / hh;
  const double off = distance(d, s * nodes.step);
  if (off > 1e-9 * std::sqrt(hh))
    throw geometry_error("point is off the node line by " + std::to_string(off));
  return s;
}

/// Value at y of the polynomial of degree count-1 interpolating f at the nodes.
template <PointFunction F>
double lagrange_interpolant(const F& f, const NodeFamily& nodes, const Point& y) {
  const double s = line_coordinate(nodes, y);
  double acc = 0.0;
  for (int j = 0; j < nodes.count; ++j) acc += f(nodes.node(j)) * lagrange_basis(j, s, nodes);
  return acc;
}

/// f(y) minus the interpolant through x_j = x + j(y-x)/l, j = 0..l-1, at y.
template <PointFunction F>
double lagrange_remainder(const F& f, const Point& x, const Point& y, int l) {
  require_same_dimension(x, y, "lagrange_remainder");
  if (l < 1) throw argument_error("lagrange_remainder: order must be at least 1");
  detail::require_order(l, "lagrange_remainder");
  if (x == y) throw degenerate_pair("lagrange_remainder: x == y");
  const NodeFamily nodes{x, (1.0 / l) * (y - x), l};
  double interp = 0.0;
  for (int j = 0; j < l; ++j) interp += f(nodes.node(j)) * lagrange_basis(j, static_cast<double>(l), nodes);
  return f(y) - interp;
}

template <PointFunction F>
double tilde_difference(const F& f, const Point& x, const Point& y, int l) {
  return detail::sign_pow(l) * lagrange_remainder(f, x, y, l);
}

/// f(y) minus the degree-(l-1) Taylor polynomial of f centered at x.
inline double taylor_remainder(const AnalyticField& f, const Point& x, const Point& y, int l) {
  require_same_dimension(x, y, "taylor_remainder");
  if (l < 1) throw argument_error("taylor_remainder: order must be at least 1");
  if (l - 1 > f.max_order())
    throw unsupported_order("taylor_remainder: order " + std::to_string(l - 1) + " exceeds max_order");
  const Point h = y - x;
  double taylor = 0.0;
  double fact = 1.0;
  for (int j = 0; j < l; ++j) {
    if (j > 0) fact *= j;
    taylor += directional_derivative(f, x, h, j, 0.0) / fact;
  }
  return eval(f, y) - taylor;
}

/// sum_{j=0}^{l} (-1)^j C(l,j) f(x+jh).
template <PointFunction F>
double g_sum(const F& f, const Point& x, const Point& h, int l) {
  require_same_dimension(x, h, "g_sum");
  detail::require_order(l, "g_sum");
  if (l == 0) return f(x);
  if (is_zero(h)) return 0.0;
  double s = 0.0;
  for (int j = 0; j <= l; ++j)
    s += detail::sign_pow(j) * static_cast<double>(binomial(l, j)) * f(along(x, h, static_cast<double>(j)));
  return s;
}

namespace detail {

/// Double-precision l-th derivative along h at x + t h.
inline double line_derivative(const AnalyticField& f, const Point& x, const Point& h, int l, double t) {
  if (f.kind() == AnalyticField::Kind::polynomial && l > f.degree()) return 0.0;
  return factorial(l) * line_taylor_coefficients(f, x, h, t, l)[static_cast<std::size_t>(l)];
}

}  // namespace detail

/// The l-fold iterated integral over [0,1]^l of the l-th derivative of f
/// along h at x + (t_1 + ... + t_l) h.
inline double g_integral(const AnalyticField& f, const Point& x, const Point& h, int l, const QuadratureRule& rule) {
  require_same_dimension(x, h, "g_integral");
  if (l < 1) throw argument_error("g_integral: l must be at least 1");
  if (rule.order < 1) throw config_error("g_integral: quadrature order must be at least 1");

  if (rule.kind == QuadratureRule::Kind::irwin_hall) {
    const QuadratureNodes piece = gauss_legendre(rule.order, 0.0, 1.0);
    double acc = 0.0;
    for (int k = 0; k < l; ++k) {
      for (std::size_t i = 0; i < piece.nodes.size(); ++i) {
        const double s = k + piece.nodes[i];
        acc += piece.weights[i] * irwin_hall_density(l, s) * detail::line_derivative(f, x, h, l, s);
      }
    }
    return acc;
  }

  const QuadratureNodes q = gauss_legendre(rule.order, 0.0, 1.0);
  const std::size_t per_axis = q.nodes.size();
  std::vector<std::size_t> idx(static_cast<std::size_t>(l), 0);
  double acc = 0.0;
  while (true) {
    double s = 0.0, w = 1.0;
    for (std::size_t i : idx) {
      s += q.nodes[i];
      w *= q.weights[i];
    }
    acc += w * detail::line_derivative(f, x, h, l, s);
    std::size_t a = 0;
    while (a < idx.size() && ++idx[a] == per_axis) idx[a++] = 0;
    if (a == idx.size()) break;
  }
  return acc;
}

/// [g_sum(x, k-1) - g_sum(x+h, k-1)] - (-1)^k D_h^k f(x); zero by Pascal's rule.
template <PointFunction F>
double telescope_residual(const F& f, const Point& x, const Point& h, int k) {
  if (k < 1) throw argument_error("telescope_residual: k must be at least 1");
  const double lhs = g_sum(f, x, h, k - 1) - g_sum(f, x + h, h, k - 1);
  return lhs - detail::sign_pow(k) * forward_difference(f, x, h, k);
}

}  // namespace lagsob

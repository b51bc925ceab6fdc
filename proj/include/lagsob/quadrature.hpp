#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "lagsob/errors.hpp"

namespace lagsob {

struct QuadratureNodes {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule of the given order on [a, b]. Exact for polynomials
/// of degree <= 2*order - 1.
inline QuadratureNodes gauss_legendre(int order, double a = -1.0, double b = 1.0) {
  if (order < 1) throw config_error("quadrature order must be at least 1");
  const auto n = static_cast<std::size_t>(order);
  QuadratureNodes q{std::vector<double>(n), std::vector<double>(n)};
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    // Newton iteration on P_n from the Tricomi initial guess.
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (std::size_t k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = pk;
      }
      if (n == 1) p0 = 1.0;
      dp = static_cast<double>(n) * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // Recompute the derivative at the converged root for the weight.
    double p0 = 1.0, p1 = z;
    for (std::size_t k = 2; k <= n; ++k) {
      const double pk = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / static_cast<double>(k);
      p0 = p1;
      p1 = pk;
    }
    if (n == 1) p0 = 1.0;
    dp = static_cast<double>(n) * (z * p1 - p0) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    q.nodes[i] = mid - half * z;
    q.nodes[n - 1 - i] = mid + half * z;
    q.weights[i] = q.weights[n - 1 - i] = half * w;
  }
  return q;
}

/// Density of the sum of l independent uniform variables on [0, 1].
inline double irwin_hall_density(int l, double s) {
  if (l < 1) throw argument_error("irwin_hall_density: l must be at least 1");
  if (s < 0.0 || s > l) return 0.0;
  double sum = 0.0;
  double binom = 1.0;
  double fact = 1.0;
  for (int k = 2; k < l; ++k) fact *= k;
  for (int k = 0; k <= l && k <= s; ++k) {
    sum += ((k % 2) ? -1.0 : 1.0) * binom * std::pow(s - k, l - 1);
    binom = binom * (l - k) / (k + 1);
  }
  return sum / fact;
}

/// How the l-fold iterated integral over [0,1]^l is discretized.
struct QuadratureRule {
  enum class Kind {
    tensor_gauss_legendre,  // product Gauss-Legendre over [0,1]^l
    irwin_hall,             // 1-D over [0,l] against the Irwin-Hall density, one Gauss-Legendre rule per unit piece
  };
  Kind kind = Kind::tensor_gauss_legendre;
  int order = 8;

  /// Default rule for an l-fold integral: order 8 per axis for the tensor
  /// rule up to l = 4 (4 beyond, to bound the q^l node count), order 16 per
  /// piece for the Irwin-Hall rule.
  static QuadratureRule defaults(Kind kind, int l) {
    if (kind == Kind::irwin_hall) return {kind, 16};
    return {kind, l <= 4 ? 8 : 4};
  }
};

}  // namespace lagsob

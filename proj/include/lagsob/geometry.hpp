#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lagsob/errors.hpp"
#include "lagsob/quadrature.hpp"

namespace lagsob {

/// Volume of the n-ball of radius r.
inline double ball_volume(int n, double r) {
  if (n < 0) throw argument_error("ball_volume: dimension must be nonnegative");
  switch (n) {
    case 0:
      return 1.0;
    case 1:
      return 2.0 * r;
    case 2:
      return std::numbers::pi * r * r;
    case 3:
      return 4.0 * std::numbers::pi * r * r * r / 3.0;
    default:
      break;
  }
  return std::pow(std::numbers::pi, 0.5 * n) * std::pow(r, n) / std::tgamma(0.5 * n + 1.0);
}

namespace detail {

inline void check_lens_args(int n, double r, double d) {
  if (n < 1) throw argument_error("lens_volume: dimension must be at least 1");
  if (!(r > 0.0)) throw argument_error("lens_volume: radius must be positive");
  if (d < 0.0) throw argument_error("lens_volume: center distance must be nonnegative");
}

}  // namespace detail

/// Lens volume |B(x,r) n B(y,r)| with |x-y| = d via the cap profile.
///
/// Each half of the lens is a cap of height r - d/2. Writing the slice
/// coordinate as z = r cos(theta), the cap is
///   V_{n-1}(1) r^n int_0^{acos(d/2r)} sin^n(theta) d theta,
/// whose integrand is smooth, so Gauss-Legendre converges spectrally.
inline double lens_volume_quadrature(int n, double r, double d, int order = 48) {
  detail::check_lens_args(n, r, d);
  if (d >= 2.0 * r) return 0.0;
  const double theta0 = std::acos(d / (2.0 * r));
  const QuadratureNodes q = gauss_legendre(order, 0.0, theta0);
  double integral = 0.0;
  for (std::size_t i = 0; i < q.nodes.size(); ++i) integral += q.weights[i] * std::pow(std::sin(q.nodes[i]), n);
  return 2.0 * ball_volume(n - 1, 1.0) * std::pow(r, n) * integral;
}

/// Closed forms for n <= 3, cap-profile quadrature beyond.
inline double lens_volume(int n, double r, double d) {
  detail::check_lens_args(n, r, d);
  if (d >= 2.0 * r) return 0.0;
  switch (n) {
    case 1:
      return 2.0 * r - d;
    case 2:
      return 2.0 * r * r * std::acos(d / (2.0 * r)) - 0.5 * d * std::sqrt(4.0 * r * r - d * d);
    case 3:
      return std::numbers::pi * (4.0 * r + d) * (2.0 * r - d) * (2.0 * r - d) / 12.0;
    default:
      return lens_volume_quadrature(n, r, d);
  }
}

/// C(n) = |B(x,r)| / |B(x,r) n B(y,r)| with r = |x-y|; independent of r.
inline double segment_ratio_constant(int n) {
  if (n < 1) throw argument_error("segment_ratio_constant: dimension must be at least 1");
  return ball_volume(n, 1.0) / lens_volume(n, 1.0, 1.0);
}

}  // namespace lagsob

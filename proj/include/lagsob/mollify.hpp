#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "lagsob/errors.hpp"
#include "lagsob/grid.hpp"
#include "lagsob/parallel.hpp"

namespace lagsob {

enum class MollifierProfile {
  bump,      // exp(1/(|x|^2 - 1)) on |x| < 1
  gaussian,  // exp(-|x|^2 / (2 sigma^2)) truncated at |x| < 3 sigma
};

/// Nonnegative radial kernel phi_eps(x) = phi(x / eps). The normalization is
/// applied on the grid (see DiscreteKernel), so that the discrete mass is 1.
class Mollifier {
 public:
  Mollifier(MollifierProfile profile, double eps, std::size_t n, double sigma = 1.0 / 3.0)
      : profile_(profile), eps_(eps), n_(n), sigma_(sigma) {
    if (!(eps > 0.0)) throw argument_error("mollifier: eps must be positive");
    if (n == 0) throw argument_error("mollifier: dimension must be at least 1");
    if (!(sigma > 0.0)) throw argument_error("mollifier: sigma must be positive");
  }

  static Mollifier bump(double eps, std::size_t n) { return Mollifier(MollifierProfile::bump, eps, n); }

  MollifierProfile profile() const { return profile_; }
  double eps() const { return eps_; }
  std::size_t dimension() const { return n_; }
  double sigma() const { return sigma_; }

  double support_radius() const { return profile_ == MollifierProfile::bump ? eps_ : 3.0 * sigma_ * eps_; }

  /// Unnormalized kernel value at displacement of length rho.
  double shape(double rho) const {
    const double u = rho / eps_;
    if (profile_ == MollifierProfile::bump) {
      if (u >= 1.0) return 0.0;
      return std::exp(1.0 / (u * u - 1.0));
    }
    if (u >= 3.0 * sigma_) return 0.0;
    return std::exp(-u * u / (2.0 * sigma_ * sigma_));
  }

 private:
  MollifierProfile profile_;
  double eps_;
  std::size_t n_;
  double sigma_;
};

/// A mollifier sampled at grid offsets with weights summing to one.
struct DiscreteKernel {
  std::vector<std::vector<long>> offsets;
  std::vector<double> weights;
  std::vector<std::size_t> reach;  // support radius in points, per axis

  static DiscreteKernel build(const Mollifier& phi, const GridSpec& grid) {
    const std::size_t n = grid.dimension();
    if (phi.dimension() != n) throw argument_error("mollifier and grid dimensions differ");
    const double support = phi.support_radius();
    DiscreteKernel k;
    k.reach.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      const double h = grid.spacing(a);
      if (2.0 * support / h < 8.0)
        throw config_error("mollifier: support " + std::to_string(support) + " is not resolved by spacing " +
                           std::to_string(h) + " (need at least 8 samples across)");
      k.reach[a] = static_cast<std::size_t>(std::floor(support / h));
      if (2 * k.reach[a] + 1 > grid.points(a))
        throw config_error("mollifier: support " + std::to_string(support) + " exceeds the grid box");
    }
    std::vector<long> off(n);
    for (std::size_t a = 0; a < n; ++a) off[a] = -static_cast<long>(k.reach[a]);
    double mass = 0.0;
    while (true) {
      double rho2 = 0.0;
      for (std::size_t a = 0; a < n; ++a) rho2 += (off[a] * grid.spacing(a)) * (off[a] * grid.spacing(a));
      const double v = phi.shape(std::sqrt(rho2));
      if (v > 0.0) {
        k.offsets.push_back(off);
        k.weights.push_back(v);
        mass += v;
      }
      std::size_t a = 0;
      while (a < n && ++off[a] > static_cast<long>(k.reach[a])) {
        off[a] = -static_cast<long>(k.reach[a]);
        ++a;
      }
      if (a == n) break;
    }
    for (double& w : k.weights) w /= mass;
    return k;
  }

  double mass() const {
    double s = 0.0;
    for (double w : weights) s += w;
    return s;
  }
};

/// (u * phi)(x_i) = sum_k w_k u(x_i - o_k), with u extended by zero outside
/// the box. Points within the kernel reach of the box (or of the input's own
/// invalid layer) are marked invalid.
inline SampledField convolve(const SampledField& u, const Mollifier& phi, unsigned workers = 1) {
  const GridSpec& grid = u.grid();
  const DiscreteKernel kernel = DiscreteKernel::build(phi, grid);
  const std::size_t n = grid.dimension();
  std::vector<double> out(grid.size());
  parallel_for(grid.size(), workers, [&](std::size_t flat) {
    const auto idx = grid.unflatten(flat);
    double acc = 0.0;
    for (std::size_t k = 0; k < kernel.offsets.size(); ++k) {
      std::size_t src = 0;
      bool inside = true;
      for (std::size_t a = 0; a < n; ++a) {
        const long j = static_cast<long>(idx[a]) - kernel.offsets[k][a];
        if (j < 0 || j >= static_cast<long>(grid.points(a))) {
          inside = false;
          break;
        }
        src += static_cast<std::size_t>(j) * grid.stride(a);
      }
      if (inside) acc += kernel.weights[k] * u[src];
    }
    out[flat] = acc;
  });
  std::vector<std::size_t> margin(n);
  for (std::size_t a = 0; a < n; ++a) margin[a] = u.valid_margin()[a] + kernel.reach[a];
  return SampledField(grid, std::move(out), std::move(margin));
}

/// (sum_i w_i |u_i|^p)^(1/p) with trapezoid weights; p = infinity gives max |u_i|.
inline double lp_norm(const SampledField& u, double p) {
  if (!(p > 0.0)) throw argument_error("lp_norm: exponent must be positive");
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : u.values()) m = std::max(m, std::abs(v));
    return m;
  }
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u.grid().weight(i) * std::pow(std::abs(u[i]), p);
  return std::pow(s, 1.0 / p);
}

/// The coefficient of the mollified inequality: a * phi_eps.
inline SampledField mollified_coefficient(const SampledField& a, const Mollifier& phi, unsigned workers = 1) {
  return convolve(a, phi, workers).transformed([](double v) { return std::max(v, 0.0); });
}

/// Embeds u in a grid enlarged by `cells` points on every side, filled with zeros.
inline SampledField zero_pad(const SampledField& u, std::size_t cells) {
  const GridSpec& g = u.grid();
  const std::size_t n = g.dimension();
  Point lo(n), hi(n);
  std::vector<std::size_t> pts(n);
  for (std::size_t a = 0; a < n; ++a) {
    lo[a] = g.lo(a) - static_cast<double>(cells) * g.spacing(a);
    hi[a] = g.hi(a) + static_cast<double>(cells) * g.spacing(a);
    pts[a] = g.points(a) + 2 * cells;
  }
  GridSpec big(lo, hi, pts);
  std::vector<double> values(big.size(), 0.0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto idx = g.unflatten(i);
    for (auto& v : idx) v += cells;
    values[big.flatten(idx)] = u[i];
  }
  return SampledField(std::move(big), std::move(values));
}

struct YoungReport {
  double lhs = 0.0;  // ||a * phi||_p
  double rhs = 0.0;  // ||a||_p
  bool pass = false;
};

/// Checks ||a * phi||_p <= ||a||_p for each p, for a field vanishing within
/// the kernel reach of the boundary. The convolution is computed once.
inline std::vector<YoungReport> young_check(const SampledField& a, const Mollifier& phi, const std::vector<double>& ps,
                                            unsigned workers = 1) {
  const GridSpec& grid = a.grid();
  const DiscreteKernel kernel = DiscreteKernel::build(phi, grid);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0.0) continue;
    const auto idx = grid.unflatten(i);
    for (std::size_t ax = 0; ax < grid.dimension(); ++ax)
      if (idx[ax] < kernel.reach[ax] || idx[ax] + kernel.reach[ax] >= grid.points(ax))
        throw config_error("young_check: field is nonzero within the kernel support of the boundary; pad it first");
  }
  const SampledField smoothed = convolve(a, phi, workers);
  std::vector<YoungReport> out;
  for (double p : ps) {
    YoungReport r;
    r.lhs = lp_norm(smoothed, p);
    r.rhs = lp_norm(a, p);
    r.pass = r.lhs <= r.rhs * (1.0 + 1e-6);
    out.push_back(r);
  }
  return out;
}

inline YoungReport young_check(const SampledField& a, const Mollifier& phi, double p, unsigned workers = 1) {
  return young_check(a, phi, std::vector<double>{p}, workers).front();
}

}  // namespace lagsob

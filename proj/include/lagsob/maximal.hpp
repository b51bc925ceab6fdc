#pragma once

// Discrete local Hardy-Littlewood maximal function and the mean maximal
// gradient built from it.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "lagsob/errors.hpp"
#include "lagsob/field.hpp"
#include "lagsob/geometry.hpp"
#include "lagsob/grid.hpp"
#include "lagsob/parallel.hpp"

namespace lagsob {

enum class BoundaryPolicy {
  clip_to_domain,        // balls are intersected with the grid box
  reject_near_boundary,  // scans only use points whose delta-ball lies in the box
};

struct MaximalConfig {
  double delta = 0.0;
  std::vector<double> radii;  // increasing, in (0, delta]
  BoundaryPolicy boundary = BoundaryPolicy::reject_near_boundary;

  /// `count` radii spaced geometrically from min_radius to delta.
  static MaximalConfig geometric(double delta, double min_radius, std::size_t count = 8,
                                 BoundaryPolicy boundary = BoundaryPolicy::reject_near_boundary) {
    if (!(min_radius > 0.0) || !(delta >= min_radius))
      throw config_error("maximal config: need 0 < min radius <= delta (min radius " + std::to_string(min_radius) +
                         ", delta " + std::to_string(delta) + ")");
    if (count == 0) throw config_error("maximal config: at least one radius");
    MaximalConfig cfg{delta, {}, boundary};
    if (count == 1 || delta == min_radius) {
      cfg.radii = {delta};
      return cfg;
    }
    for (std::size_t k = 0; k < count; ++k) {
      const double t = static_cast<double>(k) / static_cast<double>(count - 1);
      cfg.radii.push_back(k + 1 == count ? delta : min_radius * std::pow(delta / min_radius, t));
    }
    return cfg;
  }

  /// Default radii for a grid: `count` geometric values in [2 * spacing, delta].
  static MaximalConfig for_grid(const GridSpec& grid, double delta, std::size_t count = 8,
                                BoundaryPolicy boundary = BoundaryPolicy::reject_near_boundary) {
    return geometric(delta, 2.0 * grid.max_spacing(), count, boundary);
  }

  void validate() const {
    if (!(delta > 0.0)) throw config_error("maximal config: delta must be positive");
    if (radii.empty()) throw config_error("maximal config: empty radius set");
    for (std::size_t i = 0; i < radii.size(); ++i) {
      if (!(radii[i] > 0.0) || radii[i] > delta * (1.0 + 1e-12))
        throw config_error("maximal config: radii must lie in (0, delta]");
      if (i > 0 && !(radii[i] > radii[i - 1])) throw config_error("maximal config: radii must be increasing");
    }
  }
};

namespace detail {

/// One row of a discrete ball: an offset over the leading axes and the
/// half-width (in points) along the last axis.
struct BallRow {
  std::vector<long> offset;
  long half_width;
};

inline std::vector<BallRow> ball_rows(const GridSpec& grid, double r) {
  const std::size_t n = grid.dimension();
  const double r2 = r * r * (1.0 + 1e-12);
  const double h_last = grid.spacing(n - 1);
  std::vector<BallRow> rows;
  std::vector<long> reach(n - 1), off(n - 1);
  for (std::size_t a = 0; a + 1 < n; ++a) {
    reach[a] = static_cast<long>(std::floor(r / grid.spacing(a) * (1.0 + 1e-12)));
    off[a] = -reach[a];
  }
  while (true) {
    double used = 0.0;
    for (std::size_t a = 0; a + 1 < n; ++a) used += (off[a] * grid.spacing(a)) * (off[a] * grid.spacing(a));
    if (used <= r2) {
      const long w = static_cast<long>(std::floor(std::sqrt(r2 - used) / h_last + 1e-9));
      rows.push_back({off, w});
    }
    std::size_t a = 0;
    while (a + 1 < n && ++off[a] > reach[a]) {
      off[a] = -reach[a];
      ++a;
    }
    if (a + 1 >= n) break;
  }
  return rows;
}

}  // namespace detail

/// (M u)(x_i) = max over cfg.radii of the mean of u over the grid points in
/// the closed ball B(x_i, r), intersected with the grid.
inline SampledField local_maximal_function(const SampledField& u, const MaximalConfig& cfg, unsigned workers = 1) {
  cfg.validate();
  const GridSpec& grid = u.grid();
  const double spacing = grid.max_spacing();
  if (cfg.radii.front() < spacing * (1.0 - 1e-12))
    throw config_error("local_maximal_function: radius " + std::to_string(cfg.radii.front()) +
                       " is below the grid spacing " + std::to_string(spacing));

  const std::size_t n = grid.dimension();
  const std::size_t len = grid.points(n - 1);
  const std::size_t lines = grid.size() / len;

  // Prefix sums along the last axis, one row per line.
  std::vector<double> prefix(lines * (len + 1), 0.0);
  for (std::size_t line = 0; line < lines; ++line)
    for (std::size_t k = 0; k < len; ++k)
      prefix[line * (len + 1) + k + 1] = prefix[line * (len + 1) + k] + u[line * len + k];

  std::vector<std::vector<detail::BallRow>> stencils;
  stencils.reserve(cfg.radii.size());
  for (double r : cfg.radii) stencils.push_back(detail::ball_rows(grid, r));

  std::vector<double> out(grid.size());
  parallel_for(grid.size(), workers, [&](std::size_t flat) {
    const auto idx = grid.unflatten(flat);
    const long centre = static_cast<long>(idx[n - 1]);
    double best = -HUGE_VAL;
    for (const auto& rows : stencils) {
      double sum = 0.0;
      std::size_t count = 0;
      for (const auto& row : rows) {
        std::size_t line = 0;
        bool inside = true;
        for (std::size_t a = 0; a + 1 < n; ++a) {
          const long j = static_cast<long>(idx[a]) + row.offset[a];
          if (j < 0 || j >= static_cast<long>(grid.points(a))) {
            inside = false;
            break;
          }
          line += static_cast<std::size_t>(j) * (grid.stride(a) / len);
        }
        if (!inside) continue;
        const long lo = std::max(0L, centre - row.half_width);
        const long hi = std::min(static_cast<long>(len) - 1, centre + row.half_width);
        const double* p = &prefix[line * (len + 1)];
        sum += p[hi + 1] - p[lo];
        count += static_cast<std::size_t>(hi - lo + 1);
      }
      best = std::max(best, sum / static_cast<double>(count));
    }
    out[flat] = best;
  });
  return SampledField(grid, std::move(out), u.valid_margin());
}

/// a(x) = C(n) * M(|grad^m f|)(x).
inline SampledField mean_maximal_gradient(const AnalyticField& f, const GridSpec& grid, const MaximalConfig& cfg,
                                          int m, const std::vector<Point>& directions, unsigned workers = 1) {
  const SampledField grad = gradient_magnitude_field(f, grid, m, directions, workers);
  const double c = segment_ratio_constant(static_cast<int>(grid.dimension()));
  return local_maximal_function(grad, cfg, workers).scaled(c);
}

}  // namespace lagsob

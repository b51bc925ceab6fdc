#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lagsob/errors.hpp"
#include "lagsob/point.hpp"

namespace lagsob {

/// Regular tensor-product grid over an axis-aligned box.
///
/// Points are ordered lexicographically by axis index, so the last axis
/// varies fastest.
class GridSpec {
 public:
  GridSpec() = default;

  GridSpec(Point lo, Point hi, std::vector<std::size_t> points)
      : lo_(std::move(lo)), hi_(std::move(hi)), points_(std::move(points)) {
    if (lo_.empty()) throw argument_error("grid: dimension must be at least 1");
    if (lo_.size() != hi_.size() || lo_.size() != points_.size())
      throw argument_error("grid: lo/hi/points must have one entry per axis");
    spacing_.resize(lo_.size());
    strides_.assign(lo_.size(), 1);
    for (std::size_t a = 0; a < lo_.size(); ++a) {
      if (!(lo_[a] < hi_[a])) throw argument_error("grid: lo < hi required on every axis");
      if (points_[a] < 2) throw argument_error("grid: at least 2 points per axis");
      spacing_[a] = (hi_[a] - lo_[a]) / static_cast<double>(points_[a] - 1);
    }
    for (std::size_t a = lo_.size() - 1; a > 0; --a) strides_[a - 1] = strides_[a] * points_[a];
    size_ = strides_[0] * points_[0];
  }

  static GridSpec cube(std::size_t n, double lo, double hi, std::size_t points) {
    return GridSpec(Point(n, lo), Point(n, hi), std::vector<std::size_t>(n, points));
  }

  std::size_t dimension() const { return lo_.size(); }
  std::size_t size() const { return size_; }
  double lo(std::size_t axis) const { return lo_[axis]; }
  double hi(std::size_t axis) const { return hi_[axis]; }
  std::size_t points(std::size_t axis) const { return points_[axis]; }
  double spacing(std::size_t axis) const { return spacing_[axis]; }
  std::size_t stride(std::size_t axis) const { return strides_[axis]; }
  const std::vector<std::size_t>& shape() const { return points_; }

  double max_spacing() const { return *std::max_element(spacing_.begin(), spacing_.end()); }
  double min_spacing() const { return *std::min_element(spacing_.begin(), spacing_.end()); }

  double min_side() const {
    double s = HUGE_VAL;
    for (std::size_t a = 0; a < lo_.size(); ++a) s = std::min(s, hi_[a] - lo_[a]);
    return s;
  }

  Box box() const { return Box{lo_, hi_}; }

  double coordinate(std::size_t axis, std::size_t i) const {
    return i + 1 == points_[axis] ? hi_[axis] : lo_[axis] + static_cast<double>(i) * spacing_[axis];
  }

  std::vector<std::size_t> unflatten(std::size_t flat) const {
    std::vector<std::size_t> idx(lo_.size());
    for (std::size_t a = 0; a < lo_.size(); ++a) {
      idx[a] = flat / strides_[a];
      flat %= strides_[a];
    }
    return idx;
  }

  std::size_t flatten(std::span<const std::size_t> idx) const {
    std::size_t flat = 0;
    for (std::size_t a = 0; a < lo_.size(); ++a) flat += idx[a] * strides_[a];
    return flat;
  }

  Point point(std::size_t flat) const {
    Point x(lo_.size());
    for (std::size_t a = 0; a < lo_.size(); ++a) {
      x[a] = coordinate(a, flat / strides_[a]);
      flat %= strides_[a];
    }
    return x;
  }

  /// Tensor-product trapezoid weight of a grid point.
  double weight(std::size_t flat) const {
    double w = 1.0;
    for (std::size_t a = 0; a < lo_.size(); ++a) {
      const std::size_t i = flat / strides_[a];
      flat %= strides_[a];
      w *= (i == 0 || i + 1 == points_[a]) ? 0.5 * spacing_[a] : spacing_[a];
    }
    return w;
  }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  Point lo_;
  Point hi_;
  std::vector<std::size_t> points_;
  Point spacing_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 0;
};

enum class Interpolation { multilinear, nearest };

/// Values of a scalar quantity at every point of a grid.
///
/// `valid_margin` records, per axis, how many layers of points next to the
/// boundary carry values that should not be trusted (e.g. after a
/// convolution whose kernel reached past the box).
class SampledField {
 public:
  SampledField() = default;

  SampledField(GridSpec grid, std::vector<double> values, std::vector<std::size_t> valid_margin = {})
      : grid_(std::move(grid)), values_(std::move(values)), margin_(std::move(valid_margin)) {
    if (values_.size() != grid_.size())
      throw argument_error("sampled field: value count " + std::to_string(values_.size()) +
                           " does not match grid size " + std::to_string(grid_.size()));
    for (double v : values_)
      if (!std::isfinite(v)) throw argument_error("sampled field: non-finite value");
    if (margin_.empty()) margin_.assign(grid_.dimension(), 0);
    if (margin_.size() != grid_.dimension()) throw argument_error("sampled field: margin per axis required");
  }

  const GridSpec& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t flat) const { return values_[flat]; }
  std::size_t size() const { return values_.size(); }
  const std::vector<std::size_t>& valid_margin() const { return margin_; }

  bool is_valid(std::size_t flat) const {
    for (std::size_t a = 0; a < grid_.dimension(); ++a) {
      const std::size_t i = (flat / grid_.stride(a)) % grid_.points(a);
      if (i < margin_[a] || i + margin_[a] >= grid_.points(a)) return false;
    }
    return true;
  }

  /// The continuous box spanned by the valid points (empty unless every axis keeps two).
  std::pair<Box, bool> valid_box() const {
    Box b{Point(grid_.dimension()), Point(grid_.dimension())};
    for (std::size_t a = 0; a < grid_.dimension(); ++a) {
      if (2 * margin_[a] + 1 >= grid_.points(a)) return {b, false};
      b.lo[a] = grid_.coordinate(a, margin_[a]);
      b.hi[a] = grid_.coordinate(a, grid_.points(a) - 1 - margin_[a]);
    }
    return {b, true};
  }

  double interpolate(const Point& x, Interpolation mode = Interpolation::multilinear) const {
    const std::size_t n = grid_.dimension();
    if (x.size() != n) throw argument_error("interpolate: dimension mismatch");
    std::vector<std::size_t> base(n);
    Point frac(n);
    for (std::size_t a = 0; a < n; ++a) {
      const double h = grid_.spacing(a);
      const double tol = 1e-9 * h;
      if (x[a] < grid_.lo(a) - tol || x[a] > grid_.hi(a) + tol)
        throw domain_error("interpolate: point outside grid box on axis " + std::to_string(a));
      double u = std::clamp((x[a] - grid_.lo(a)) / h, 0.0, static_cast<double>(grid_.points(a) - 1));
      if (std::abs(u - std::round(u)) <= 1e-9) u = std::round(u);  // grid points read back exactly
      if (mode == Interpolation::nearest) {
        base[a] = static_cast<std::size_t>(std::lround(u));
        continue;
      }
      std::size_t i0 = static_cast<std::size_t>(std::floor(u));
      if (i0 + 1 >= grid_.points(a)) i0 = grid_.points(a) - 2;
      base[a] = i0;
      frac[a] = std::clamp(u - static_cast<double>(i0), 0.0, 1.0);
    }
    if (mode == Interpolation::nearest) return values_[grid_.flatten(base)];

    double acc = 0.0;
    const std::size_t corners = std::size_t{1} << n;
    for (std::size_t c = 0; c < corners; ++c) {
      double w = 1.0;
      std::size_t flat = 0;
      for (std::size_t a = 0; a < n; ++a) {
        const bool upper = (c >> a) & 1U;
        w *= upper ? frac[a] : 1.0 - frac[a];
        flat += (base[a] + (upper ? 1 : 0)) * grid_.stride(a);
      }
      if (w != 0.0) acc += w * values_[flat];
    }
    return acc;
  }

  double operator()(const Point& x) const { return interpolate(x); }

  SampledField transformed(const std::function<double(double)>& fn) const {
    std::vector<double> out(values_.size());
    std::transform(values_.begin(), values_.end(), out.begin(), fn);
    return SampledField(grid_, std::move(out), margin_);
  }

  SampledField scaled(double c) const {
    return transformed([c](double v) { return c * v; });
  }

 private:
  GridSpec grid_;
  std::vector<double> values_;
  std::vector<std::size_t> margin_;
};

}  // namespace lagsob

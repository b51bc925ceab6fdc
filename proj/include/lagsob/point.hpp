#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "lagsob/errors.hpp"

namespace lagsob {

/// A point (or displacement) in R^n.
using Point = std::vector<double>;

inline void require_same_dimension(const Point& a, const Point& b, const char* what) {
  if (a.size() != b.size()) {
    throw argument_error(std::string(what) + ": dimension mismatch (" + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()) + ")");
  }
}

inline double dot(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(const Point& a) { return std::sqrt(dot(a, a)); }

inline Point operator+(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Point operator-(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Point operator*(double c, const Point& a) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

/// x + t*h, evaluated componentwise.
inline Point along(const Point& x, const Point& h, double t) {
  Point r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + t * h[i];
  return r;
}

inline double distance(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

inline bool is_zero(const Point& a) {
  for (double v : a)
    if (v != 0.0) return false;
  return true;
}

/// Axis-aligned closed box.
struct Box {
  Point lo;
  Point hi;

  std::size_t dimension() const { return lo.size(); }

  bool contains(const Point& x) const {
    for (std::size_t i = 0; i < lo.size(); ++i)
      if (!(x[i] >= lo[i] && x[i] <= hi[i])) return false;
    return true;
  }

  /// Closed ball B(x, r) is inside the box.
  bool contains_ball(const Point& x, double r) const {
    for (std::size_t i = 0; i < lo.size(); ++i)
      if (x[i] - r < lo[i] || x[i] + r > hi[i]) return false;
    return true;
  }

  static Box unbounded(std::size_t n) {
    return Box{Point(n, -HUGE_VAL), Point(n, HUGE_VAL)};
  }

  static Box cube(std::size_t n, double lo, double hi) { return Box{Point(n, lo), Point(n, hi)}; }
};

}  // namespace lagsob

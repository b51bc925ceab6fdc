#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lagsob/errors.hpp"
#include "lagsob/point.hpp"

namespace lagsob {

/// The region G on which pairs are drawn: a box, or a box with a box removed.
class Domain {
 public:
  static Domain box(Box outer) {
    validate(outer, "domain box");
    return Domain(std::move(outer), std::nullopt);
  }

  /// outer minus the closed box `hole`.
  static Domain box_with_hole(Box outer, Box hole) {
    validate(outer, "domain box");
    validate(hole, "domain hole");
    if (outer.dimension() != hole.dimension()) throw argument_error("domain: hole dimension mismatch");
    bool covers = true;
    for (std::size_t a = 0; a < outer.dimension(); ++a)
      covers = covers && hole.lo[a] <= outer.lo[a] && hole.hi[a] >= outer.hi[a];
    if (covers) throw argument_error("domain: hole covers the whole box");
    return Domain(std::move(outer), std::move(hole));
  }

  bool contains(const Point& x) const {
    if (x.size() != outer_.dimension() || !outer_.contains(x)) return false;
    return !(hole_ && hole_->contains(x));
  }

  /// All `samples` equally spaced points of [x, y] (endpoints included) lie in G.
  bool segment_inside(const Point& x, const Point& y, std::size_t samples) const {
    if (samples < 2) return contains(x) && contains(y);
    for (std::size_t k = 0; k < samples; ++k) {
      const double t = static_cast<double>(k) / static_cast<double>(samples - 1);
      if (!contains(along(x, y - x, t))) return false;
    }
    return true;
  }

  const Box& bounds() const { return outer_; }
  const std::optional<Box>& hole() const { return hole_; }
  std::size_t dimension() const { return outer_.dimension(); }

 private:
  Domain(Box outer, std::optional<Box> hole) : outer_(std::move(outer)), hole_(std::move(hole)) {}

  static void validate(const Box& b, const char* what) {
    if (b.lo.empty() || b.lo.size() != b.hi.size()) throw argument_error(std::string(what) + ": malformed");
    for (std::size_t a = 0; a < b.lo.size(); ++a)
      if (!(b.lo[a] < b.hi[a])) throw argument_error(std::string(what) + ": empty interior");
  }

  Box outer_;
  std::optional<Box> hole_;
};

/// Platform-independent uniform doubles from a seeded mt19937_64.
class UniformSource {
 public:
  explicit UniformSource(std::uint64_t seed) : engine_(seed) {}

  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double next(double lo, double hi) { return lo + (hi - lo) * next(); }

  Point in_box(const Box& b) {
    Point x(b.dimension());
    for (std::size_t a = 0; a < x.size(); ++a) x[a] = next(b.lo[a], b.hi[a]);
    return x;
  }

 private:
  std::mt19937_64 engine_;
};

struct PairSampler {
  Domain domain;
  std::size_t count = 1000;
  std::uint64_t seed = 1;
  double min_separation = 0.0;
  double max_separation = HUGE_VAL;
  std::size_t segment_samples = 64;
  std::size_t max_attempts = 1'000'000;
};

struct PairSet {
  std::vector<std::pair<Point, Point>> pairs;
  std::size_t attempts = 0;
  std::size_t rejected = 0;
};

using PairPredicate = std::function<bool(const Point&, const Point&)>;

/// Rejection sampling of pairs uniform over G x G, filtered by separation,
/// the segment condition, and an optional extra admissibility test.
/// Deterministic for a given seed.
inline PairSet sample_pairs(const PairSampler& s, const PairPredicate& admissible = {}) {
  if (!(s.min_separation >= 0.0) || !(s.max_separation >= s.min_separation))
    throw config_error("pair sampler: need 0 <= min separation <= max separation");
  UniformSource rng(s.seed);
  PairSet out;
  out.pairs.reserve(s.count);
  while (out.pairs.size() < s.count && out.attempts < s.max_attempts) {
    ++out.attempts;
    Point x = rng.in_box(s.domain.bounds());
    Point y = rng.in_box(s.domain.bounds());
    const double sep = distance(x, y);
    const bool ok = sep > 0.0 && sep >= s.min_separation && sep <= s.max_separation &&
                    s.domain.segment_inside(x, y, s.segment_samples) && (!admissible || admissible(x, y));
    if (!ok) {
      ++out.rejected;
      continue;
    }
    out.pairs.emplace_back(std::move(x), std::move(y));
  }
  return out;
}

/// A base point and a step for difference-based scans.
struct Step {
  Point x;
  Point h;
};

/// Draws x uniformly in `box` and h uniformly in direction with length
/// uniform in [min_step, max_step], 0 < max_step <= 1.
struct StepSampler {
  Box box;
  std::size_t count = 1000;
  std::uint64_t seed = 1;
  double min_step = 0.0;
  double max_step = 1.0;
};

inline std::vector<Step> sample_steps(const StepSampler& s) {
  if (!(s.max_step > 0.0) || s.max_step > 1.0 || s.min_step < 0.0 || s.min_step > s.max_step)
    throw config_error("step sampler: need 0 <= min_step <= max_step <= 1, max_step > 0");
  UniformSource rng(s.seed);
  const std::size_t n = s.box.dimension();
  std::vector<Step> steps;
  steps.reserve(s.count);
  while (steps.size() < s.count) {
    Point x = rng.in_box(s.box);
    Point dir(n);
    double len2 = 0.0;
    do {
      for (auto& v : dir) v = rng.next(-1.0, 1.0);
      len2 = dot(dir, dir);
    } while (len2 > 1.0 || len2 < 1e-12);
    double len = rng.next(s.min_step, s.max_step);
    if (len == 0.0) len = s.max_step;
    steps.push_back({std::move(x), (len / std::sqrt(len2)) * dir});
  }
  return steps;
}

}  // namespace lagsob

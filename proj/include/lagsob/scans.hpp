#pragma once

// Pointwise-inequality scans over sampled point pairs.
//
// Every scan builds its coefficient from the field (or takes it as a grid
// function), draws admissible pairs, evaluates lhs and rhs per pair, and
// folds the results into an InequalityReport. A pair violates the
// inequality when lhs / rhs > 1 + slack.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lagsob/difference.hpp"
#include "lagsob/errors.hpp"
#include "lagsob/field.hpp"
#include "lagsob/geometry.hpp"
#include "lagsob/grid.hpp"
#include "lagsob/maximal.hpp"
#include "lagsob/mollify.hpp"
#include "lagsob/parallel.hpp"
#include "lagsob/report.hpp"
#include "lagsob/sampling.hpp"

namespace lagsob {

inline constexpr double kDefaultSlack = 0.05;

/// Remainders no larger than this multiple of the sum of the magnitudes of
/// their terms are rounding noise and count as zero.
inline constexpr double kRoundoffFloor = 32.0 * std::numeric_limits<double>::epsilon();

struct ScanConfig {
  /// Maximal-function radii bounds; each pair uses the smallest delta >= |x - y|.
  std::vector<double> delta_ladder;
  std::size_t radii_count = 8;
  BoundaryPolicy boundary = BoundaryPolicy::reject_near_boundary;
  double slack = kDefaultSlack;
  Interpolation interpolation = Interpolation::multilinear;
  std::vector<Point> directions;  // empty: default_directions(n)
  unsigned workers = 1;

  /// delta_max / 8, / 4, / 2, delta_max with delta_max = 0.2 * shortest side,
  /// dropping values below 4 grid spacings.
  static std::vector<double> default_ladder(const GridSpec& grid) {
    const double top = 0.2 * grid.min_side();
    std::vector<double> ladder;
    for (double div : {8.0, 4.0, 2.0, 1.0})
      if (top / div >= 4.0 * grid.max_spacing()) ladder.push_back(top / div);
    if (ladder.empty()) ladder.push_back(top);
    return ladder;
  }

  static ScanConfig defaults(const GridSpec& grid) {
    ScanConfig cfg;
    cfg.delta_ladder = default_ladder(grid);
    return cfg;
  }

  std::vector<Point> directions_for(std::size_t n) const {
    return directions.empty() ? default_directions(n) : directions;
  }

  MaximalConfig maximal(const GridSpec& grid, double delta) const {
    return MaximalConfig::for_grid(grid, delta, radii_count, boundary);
  }

  void validate() const {
    if (delta_ladder.empty()) throw config_error("scan config: empty delta ladder");
    for (std::size_t i = 0; i < delta_ladder.size(); ++i) {
      if (!(delta_ladder[i] > 0.0)) throw config_error("scan config: delta must be positive");
      if (i > 0 && !(delta_ladder[i] > delta_ladder[i - 1]))
        throw config_error("scan config: delta ladder must be increasing");
    }
    if (!(slack >= 0.0)) throw config_error("scan config: slack must be nonnegative");
  }

  nlohmann::json to_json() const {
    return {{"delta_ladder", delta_ladder},
            {"radii_count", radii_count},
            {"boundary", boundary == BoundaryPolicy::reject_near_boundary ? "reject_near_boundary" : "clip_to_domain"},
            {"interpolation", interpolation == Interpolation::multilinear ? "multilinear" : "nearest"},
            {"slack", slack}};
  }
};

/// Coefficient fields a_delta for every delta of a ladder, with the pair
/// admissibility rule that goes with them.
class CoefficientLadder {
 public:
  CoefficientLadder(std::vector<double> deltas, std::vector<SampledField> fields, BoundaryPolicy boundary,
                    Interpolation interpolation)
      : deltas_(std::move(deltas)), fields_(std::move(fields)), boundary_(boundary), interpolation_(interpolation) {
    if (deltas_.size() != fields_.size() || deltas_.empty())
      throw argument_error("coefficient ladder: one field per delta required");
  }

  /// C(n) * M^delta(|grad^m f|) for every delta of the config's ladder.
  static CoefficientLadder mean_maximal(const AnalyticField& f, const GridSpec& grid, const ScanConfig& cfg, int m) {
    cfg.validate();
    const auto dirs = cfg.directions_for(grid.dimension());
    const SampledField grad = gradient_magnitude_field(f, grid, m, dirs, cfg.workers);
    const double c = segment_ratio_constant(static_cast<int>(grid.dimension()));
    std::vector<SampledField> fields;
    for (double delta : cfg.delta_ladder)
      fields.push_back(local_maximal_function(grad, cfg.maximal(grid, delta), cfg.workers).scaled(c));
    return CoefficientLadder(cfg.delta_ladder, std::move(fields), cfg.boundary, cfg.interpolation);
  }

  std::size_t size() const { return deltas_.size(); }
  double delta(std::size_t level) const { return deltas_[level]; }
  const SampledField& field(std::size_t level) const { return fields_[level]; }
  const GridSpec& grid() const { return fields_.front().grid(); }

  std::optional<std::size_t> level_for(double separation) const {
    for (std::size_t i = 0; i < deltas_.size(); ++i)
      if (separation <= deltas_[i]) return i;
    return std::nullopt;
  }

  bool admissible(const Point& x, const Point& y) const {
    const auto level = level_for(distance(x, y));
    if (!level) return false;
    const Box box = grid().box();
    if (boundary_ == BoundaryPolicy::reject_near_boundary)
      return box.contains_ball(x, deltas_[*level]) && box.contains_ball(y, deltas_[*level]);
    return box.contains(x) && box.contains(y);
  }

  double value(std::size_t level, const Point& x) const { return fields_[level].interpolate(x, interpolation_); }

  /// Same ladder with every field transformed.
  template <class Fn>
  CoefficientLadder mapped(Fn&& fn) const {
    std::vector<SampledField> out;
    for (const auto& f : fields_) out.push_back(fn(f));
    return CoefficientLadder(deltas_, std::move(out), boundary_, interpolation_);
  }

 private:
  std::vector<double> deltas_;
  std::vector<SampledField> fields_;
  BoundaryPolicy boundary_;
  Interpolation interpolation_;
};

namespace detail {

template <class Eval>
std::vector<PairEvaluation> evaluate_pairs(const std::vector<std::pair<Point, Point>>& pairs, unsigned workers,
                                           Eval&& eval) {
  std::vector<PairEvaluation> out(pairs.size());
  parallel_for(pairs.size(), workers, [&](std::size_t i) {
    const auto& [x, y] = pairs[i];
    const auto [lhs, rhs] = eval(x, y);
    out[i] = PairEvaluation{x, y, lhs, rhs};
  });
  return out;
}

inline PairSet require_pairs(const PairSampler& sampler, const PairPredicate& admissible, const char* scan) {
  PairSet set = sample_pairs(sampler, admissible);
  if (set.pairs.empty())
    throw empty_scan(std::string(scan) + ": no admissible pairs after " + std::to_string(set.attempts) + " attempts");
  return set;
}

inline bool nodes_in_domain(const AnalyticField& f, const Point& x, const Point& y, int m) {
  if (!f.in_domain(x) || !f.in_domain(y)) return false;
  const Point h = (1.0 / m) * (y - x);
  for (int j = 1; j < m; ++j)
    if (!f.in_domain(along(x, h, j))) return false;
  return true;
}

/// |D^m f(x;y)|, or 0 when it is below the rounding floor of its terms.
template <PointFunction F>
double remainder_magnitude(const F& f, const Point& x, const Point& y, int m) {
  if (x == y) throw degenerate_pair("remainder_magnitude: x == y");
  const NodeFamily nodes{x, (1.0 / m) * (y - x), m};
  const double fy = f(y);
  double interp = 0.0, scale = std::abs(fy);
  for (int j = 0; j < m; ++j) {
    const double t = f(nodes.node(j)) * lagrange_basis(j, static_cast<double>(m), nodes);
    interp += t;
    scale += std::abs(t);
  }
  const double r = std::abs(fy - interp);
  return r <= kRoundoffFloor * scale ? 0.0 : r;
}

/// |D_h^m f(x)|, or 0 when it is below the rounding floor of its terms.
template <PointFunction F>
double difference_magnitude(const F& f, const Point& x, const Point& h, int m) {
  double s = 0.0, scale = 0.0;
  for (int j = 0; j <= m; ++j) {
    const double t = ((m - j) % 2 ? -1.0 : 1.0) * static_cast<double>(binomial(m, j)) * f(along(x, h, j));
    s += t;
    scale += std::abs(t);
  }
  const double r = std::abs(s);
  return r <= kRoundoffFloor * scale ? 0.0 : r;
}

inline nlohmann::json scan_params(const AnalyticField& f, const ScanConfig& cfg, int m, double s) {
  nlohmann::json p = cfg.to_json();
  p["field"] = f.name();
  p["m"] = m;
  p["s"] = s;
  return p;
}

}  // namespace detail

/// |f(x) - f(y)| <= |x-y| (a(x) + a(y)) with a = C(n) M^delta(|grad f|).
inline InequalityReport lemma1_scan(const AnalyticField& f, const GridSpec& grid, const ScanConfig& cfg,
                                    const PairSampler& sampler) {
  const auto ladder = CoefficientLadder::mean_maximal(f, grid, cfg, 1);
  const PairSet set = detail::require_pairs(
      sampler, [&](const Point& x, const Point& y) { return ladder.admissible(x, y) && detail::nodes_in_domain(f, x, y, 1); },
      "lemma1_scan");
  auto evals = detail::evaluate_pairs(set.pairs, cfg.workers, [&](const Point& x, const Point& y) {
    const double sep = distance(x, y);
    const std::size_t level = *ladder.level_for(sep);
    return std::pair{detail::remainder_magnitude(f, x, y, 1), sep * (ladder.value(level, x) + ladder.value(level, y))};
  });
  InequalityReport r = summarize("lemma1", std::move(evals), cfg.slack, detail::scan_params(f, cfg, 1, 1.0));
  r.n_rejected = set.rejected;
  return r;
}

/// |D^m f(x;y)| <= |x-y|^m (a(x) + a(y)) with a = C(n) M^delta(|grad^m f|).
inline InequalityReport main_inequality_scan(const AnalyticField& f, int m, const GridSpec& grid,
                                             const ScanConfig& cfg, const PairSampler& sampler) {
  if (m < 1) throw argument_error("main_inequality_scan: m must be at least 1");
  const auto ladder = CoefficientLadder::mean_maximal(f, grid, cfg, m);
  const PairSet set = detail::require_pairs(
      sampler, [&](const Point& x, const Point& y) { return ladder.admissible(x, y) && detail::nodes_in_domain(f, x, y, m); },
      "main_inequality_scan");
  auto evals = detail::evaluate_pairs(set.pairs, cfg.workers, [&](const Point& x, const Point& y) {
    const double sep = distance(x, y);
    const std::size_t level = *ladder.level_for(sep);
    return std::pair{detail::remainder_magnitude(f, x, y, m),
                     std::pow(sep, m) * (ladder.value(level, x) + ladder.value(level, y))};
  });
  InequalityReport r =
      summarize("main_inequality", std::move(evals), cfg.slack, detail::scan_params(f, cfg, m, static_cast<double>(m)));
  r.n_rejected = set.rejected;
  return r;
}

/// |D_h^m f(x)| <= |h|^s sum_{l=0}^m g(x + l h) over the given steps.
/// Steps whose nodes leave g's grid (or f's domain) are skipped and counted.
template <PointFunction F>
InequalityReport triebel_scan(const F& f, int m, double s, const SampledField& g, const std::vector<Step>& steps,
                              double slack = kDefaultSlack, unsigned workers = 1) {
  if (m < 1) throw argument_error("triebel_scan: m must be at least 1");
  if (!(s > 0.0) || s > m) throw argument_error("triebel_scan: need 0 < s <= m");
  const Box box = g.grid().box();
  std::vector<std::pair<Point, Point>> kept;
  std::vector<Point> steps_kept;
  std::size_t skipped = 0;
  for (const auto& st : steps) {
    const double len = norm(st.h);
    if (!(len > 0.0) || len > 1.0) throw argument_error("triebel_scan: steps need 0 < |h| <= 1");
    bool inside = true;
    for (int l = 0; l <= m && inside; ++l) {
      const Point node = along(st.x, st.h, l);
      inside = box.contains(node);
      if constexpr (std::is_same_v<F, AnalyticField>) inside = inside && f.in_domain(node);
    }
    if (!inside) {
      ++skipped;
      continue;
    }
    kept.emplace_back(st.x, along(st.x, st.h, m));
    steps_kept.push_back(st.h);
  }
  std::vector<PairEvaluation> evals(kept.size());
  parallel_for(kept.size(), workers, [&](std::size_t i) {
    const Point& x = kept[i].first;
    const Point& h = steps_kept[i];
    double sum = 0.0;
    for (int l = 0; l <= m; ++l) sum += g(along(x, h, l));
    evals[i] = {x, kept[i].second, detail::difference_magnitude(f, x, h, m), std::pow(norm(h), s) * sum};
  });
  InequalityReport r = summarize("triebel", std::move(evals), slack, {{"m", m}, {"s", s}});
  r.n_skipped = skipped;
  return r;
}

struct NodeDiscardReport {
  InequalityReport main;     // the two-endpoint inequality with a
  InequalityReport triebel;  // all-node inequality with g = m^m a, s = m
  bool precondition_met = false;
  bool pass = false;
};

/// Checks that the two-endpoint inequality implies the all-node one with
/// g = m^m a and s = m, on steps h = (y - x)/m of the sampled pairs.
inline NodeDiscardReport node_discard_check(const AnalyticField& f, int m, const GridSpec& grid, const ScanConfig& cfg,
                                            const PairSampler& sampler) {
  if (m < 1) throw argument_error("node_discard_check: m must be at least 1");
  const auto ladder = CoefficientLadder::mean_maximal(f, grid, cfg, m);
  const PairSet set = detail::require_pairs(
      sampler, [&](const Point& x, const Point& y) { return ladder.admissible(x, y) && detail::nodes_in_domain(f, x, y, m); },
      "node_discard_check");
  const double mm = std::pow(static_cast<double>(m), m);

  auto main_evals = detail::evaluate_pairs(set.pairs, cfg.workers, [&](const Point& x, const Point& y) {
    const double sep = distance(x, y);
    const std::size_t level = *ladder.level_for(sep);
    return std::pair{detail::remainder_magnitude(f, x, y, m),
                     std::pow(sep, m) * (ladder.value(level, x) + ladder.value(level, y))};
  });
  auto triebel_evals = detail::evaluate_pairs(set.pairs, cfg.workers, [&](const Point& x, const Point& y) {
    const std::size_t level = *ladder.level_for(distance(x, y));
    const Point h = (1.0 / m) * (y - x);
    double sum = 0.0;
    for (int l = 0; l <= m; ++l) sum += mm * ladder.value(level, along(x, h, l));
    return std::pair{detail::difference_magnitude(f, x, h, m), std::pow(norm(h), m) * sum};
  });

  NodeDiscardReport out;
  const auto params = detail::scan_params(f, cfg, m, static_cast<double>(m));
  out.main = summarize("main_inequality", std::move(main_evals), cfg.slack, params);
  out.triebel = summarize("node_discard", std::move(triebel_evals), cfg.slack, params);
  out.main.n_rejected = out.triebel.n_rejected = set.rejected;
  out.precondition_met = out.main.passed();
  out.pass = out.triebel.passed();
  return out;
}

/// |D^m f(x;y)| <= |x-y|^s (g(x) + g(y)) for a grid function g, 0 < s <= m.
inline InequalityReport hatL_scan(const AnalyticField& f, double s, int m, const SampledField& g,
                                  const PairSampler& sampler, double slack = kDefaultSlack, unsigned workers = 1) {
  if (m < 1) throw argument_error("hatL_scan: m must be at least 1");
  if (!(s > 0.0) || s > m) throw argument_error("hatL_scan: need 0 < s <= m");
  const Box box = g.grid().box();
  const PairSet set = detail::require_pairs(
      sampler,
      [&](const Point& x, const Point& y) {
        return box.contains(x) && box.contains(y) && detail::nodes_in_domain(f, x, y, m);
      },
      "hatL_scan");
  auto evals = detail::evaluate_pairs(set.pairs, workers, [&](const Point& x, const Point& y) {
    return std::pair{detail::remainder_magnitude(f, x, y, m), std::pow(distance(x, y), s) * (g(x) + g(y))};
  });
  InequalityReport r = summarize("hatL", std::move(evals), slack, {{"field", f.name()}, {"m", m}, {"s", s}});
  r.n_rejected = set.rejected;
  return r;
}

/// Upper estimate ||f||_p + ||m^m a||_p of the quasinorm with s = m, where a
/// is the mean maximal m-gradient on the grid.
inline double quasinorm_upper(const AnalyticField& f, int m, double p, const GridSpec& grid, const MaximalConfig& cfg,
                              const std::vector<Point>& directions = {}, unsigned workers = 1) {
  if (m < 1) throw argument_error("quasinorm_upper: m must be at least 1");
  const auto dirs = directions.empty() ? default_directions(grid.dimension()) : directions;
  const SampledField a = mean_maximal_gradient(f, grid, cfg, m, dirs, workers);
  return lp_norm(sample(f, grid, {}, workers), p) + lp_norm(a.scaled(std::pow(static_cast<double>(m), m)), p);
}

/// The main inequality for f_eps = f * phi_eps against a_eps = a * phi_eps,
/// with f_eps sampled on the grid and read off by multilinear interpolation.
/// Pairs are restricted to the interior where the convolution is valid.
/// `coefficients` is the unmollified ladder for (f, m) on `grid`.
inline InequalityReport mollified_scan(const AnalyticField& f, int m, const Mollifier& phi, const GridSpec& grid,
                                       const ScanConfig& cfg, const PairSampler& sampler,
                                       const CoefficientLadder& coefficients) {
  if (m < 1) throw argument_error("mollified_scan: m must be at least 1");
  const SampledField f_eps = convolve(sample(f, grid, {}, cfg.workers), phi, cfg.workers);
  const auto [interior, nonempty] = f_eps.valid_box();
  if (!nonempty) throw config_error("mollified_scan: no interior left after erosion by the kernel support");
  const auto ladder = coefficients.mapped(
      [&](const SampledField& a) { return mollified_coefficient(a, phi, cfg.workers); });
  const PairSet set = detail::require_pairs(
      sampler,
      [&](const Point& x, const Point& y) {
        return interior.contains(x) && interior.contains(y) && ladder.admissible(x, y);
      },
      "mollified_scan");
  auto evals = detail::evaluate_pairs(set.pairs, cfg.workers, [&](const Point& x, const Point& y) {
    const double sep = distance(x, y);
    const std::size_t level = *ladder.level_for(sep);
    return std::pair{detail::remainder_magnitude(f_eps, x, y, m),
                     std::pow(sep, m) * (ladder.value(level, x) + ladder.value(level, y))};
  });
  auto params = detail::scan_params(f, cfg, m, static_cast<double>(m));
  params["eps"] = phi.eps();
  InequalityReport r = summarize("mollified", std::move(evals), cfg.slack, std::move(params));
  r.n_rejected = set.rejected;
  return r;
}

inline InequalityReport mollified_scan(const AnalyticField& f, int m, const Mollifier& phi, const GridSpec& grid,
                                       const ScanConfig& cfg, const PairSampler& sampler) {
  if (m < 1) throw argument_error("mollified_scan: m must be at least 1");
  return mollified_scan(f, m, phi, grid, cfg, sampler, CoefficientLadder::mean_maximal(f, grid, cfg, m));
}

}  // namespace lagsob

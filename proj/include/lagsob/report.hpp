#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lagsob/point.hpp"

namespace lagsob {

/// One evaluated pair of a scan. lhs and rhs are nonnegative.
struct PairEvaluation {
  Point x;
  Point y;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct Violation {
  Point x;
  Point y;
  double lhs;
  double rhs;
  double ratio;
};

struct Quantiles {
  double p50 = 0.0;
  double p90 = 0.0;
  double p99 = 0.0;
};

struct InequalityReport {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  std::size_t n_pairs = 0;
  std::size_t n_violations = 0;
  std::size_t n_infinite = 0;  // rhs == 0 < lhs
  std::size_t n_rejected = 0;  // sampler draws that failed admissibility
  std::size_t n_skipped = 0;   // steps whose nodes left the grid
  double max_ratio = 0.0;
  Quantiles quantiles;
  double slack = 0.0;
  std::vector<Violation> violations;
  std::vector<PairEvaluation> pairs;
  std::vector<double> ratios;  // per pair, same order as `pairs`

  bool passed() const { return n_violations == 0; }
};

/// lhs/rhs with 0/0 = 0 and lhs/0 = +inf.
inline double inequality_ratio(double lhs, double rhs) {
  if (rhs > 0.0) return lhs / rhs;
  return lhs > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
}

namespace detail {

/// Linearly interpolated quantile of sorted data.
inline double quantile_sorted(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return 0.0;
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  if (std::isinf(sorted[hi]) || std::isinf(sorted[lo])) return sorted[hi];
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace detail

inline InequalityReport summarize(std::string name, std::vector<PairEvaluation> evals, double slack,
                                  nlohmann::json params = nlohmann::json::object()) {
  InequalityReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.slack = slack;
  r.n_pairs = evals.size();
  r.ratios.reserve(evals.size());
  for (const auto& e : evals) {
    const double ratio = inequality_ratio(e.lhs, e.rhs);
    r.ratios.push_back(ratio);
    r.max_ratio = std::max(r.max_ratio, ratio);
    if (ratio > 1.0 + slack) {
      ++r.n_violations;
      if (std::isinf(ratio)) ++r.n_infinite;
      r.violations.push_back({e.x, e.y, e.lhs, e.rhs, ratio});
    }
  }
  std::vector<double> sorted = r.ratios;
  std::sort(sorted.begin(), sorted.end());
  r.quantiles = {detail::quantile_sorted(sorted, 0.5), detail::quantile_sorted(sorted, 0.9),
                 detail::quantile_sorted(sorted, 0.99)};
  r.pairs = std::move(evals);
  return r;
}

namespace detail {

/// Infinite ratios have no JSON number; they are written as null.
inline nlohmann::json finite_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

}  // namespace detail

inline nlohmann::json to_json(const InequalityReport& r) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"x", v.x}, {"y", v.y}, {"lhs", v.lhs}, {"rhs", v.rhs}, {"ratio", detail::finite_or_null(v.ratio)}});
  return {
      {"name", r.name},
      {"params", r.params},
      {"n_pairs", r.n_pairs},
      {"n_violations", r.n_violations},
      {"n_infinite", r.n_infinite},
      {"n_rejected", r.n_rejected},
      {"n_skipped", r.n_skipped},
      {"max_ratio", detail::finite_or_null(r.max_ratio)},
      {"quantiles",
       {{"p50", detail::finite_or_null(r.quantiles.p50)},
        {"p90", detail::finite_or_null(r.quantiles.p90)},
        {"p99", detail::finite_or_null(r.quantiles.p99)}}},
      {"slack", r.slack},
      {"violations", std::move(violations)},
  };
}

/// Per-pair rows: index, x coordinates, y coordinates, lhs, rhs, ratio.
inline std::string to_csv(const InequalityReport& r) {
  std::ostringstream os;
  const std::size_t n = r.pairs.empty() ? 0 : r.pairs.front().x.size();
  os << "index";
  for (std::size_t a = 0; a < n; ++a) os << ",x" << a;
  for (std::size_t a = 0; a < n; ++a) os << ",y" << a;
  os << ",lhs,rhs,ratio\n";
  char buf[40];
  auto put = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << ',' << buf;
  };
  for (std::size_t i = 0; i < r.pairs.size(); ++i) {
    const auto& e = r.pairs[i];
    os << i;
    for (double v : e.x) put(v);
    for (double v : e.y) put(v);
    put(e.lhs);
    put(e.rhs);
    put(r.ratios[i]);
    os << '\n';
  }
  return os.str();
}

}  // namespace lagsob

#pragma once

// Analytic test functions with closed-form derivatives along lines, and
// their sampling onto grids.

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lagsob/errors.hpp"
#include "lagsob/grid.hpp"
#include "lagsob/parallel.hpp"
#include "lagsob/point.hpp"

namespace lagsob {

using Rational = boost::multiprecision::mpq_rational;

inline constexpr int kDefaultMaxOrder = 12;

/// Radius of the ball around the singular point excluded from |x - c|^alpha.
inline constexpr double kPowerExclusionRadius = 0.05;

struct Monomial {
  Rational coefficient;
  std::vector<int> exponents;  // one per axis

  int degree() const {
    int d = 0;
    for (int e : exponents) d += e;
    return d;
  }
};

/// A scalar test function on (a box in) R^n whose restriction to any line
/// can be differentiated to any order up to max_order in closed form.
class AnalyticField {
 public:
  enum class Kind { polynomial, gaussian, power, sinusoid };

  /// Sum of monomials with exact rational coefficients.
  static AnalyticField polynomial(std::size_t n, std::vector<Monomial> terms) {
    AnalyticField f(Kind::polynomial, n);
    for (auto& t : terms) {
      if (t.exponents.size() != n) throw argument_error("polynomial: exponent count must equal dimension");
      for (int e : t.exponents)
        if (e < 0) throw argument_error("polynomial: negative exponent");
      if (t.coefficient == 0) continue;
      f.coeff_values_.push_back(t.coefficient.convert_to<double>());
      f.terms_.push_back(std::move(t));
    }
    return f;
  }

  static AnalyticField constant(std::size_t n, const Rational& c) {
    return polynomial(n, {Monomial{c, std::vector<int>(n, 0)}});
  }

  /// exp(-a |x|^2)
  static AnalyticField gaussian(std::size_t n, double a) {
    if (!(a > 0.0)) throw argument_error("gaussian: rate a must be positive");
    AnalyticField f(Kind::gaussian, n);
    f.rate_ = a;
    return f;
  }

  /// |x - c|^alpha, undefined on the ball of radius kPowerExclusionRadius around c.
  static AnalyticField power(std::size_t n, double alpha, Point center = {}) {
    if (!(alpha > 0.0)) throw argument_error("power: exponent alpha must be positive");
    if (center.empty()) center.assign(n, 0.0);
    if (center.size() != n) throw argument_error("power: center dimension mismatch");
    AnalyticField f(Kind::power, n);
    f.exponent_ = alpha;
    f.center_ = std::move(center);
    return f;
  }

  /// prod_i sin(omega_i x_i); the dimension is the number of frequencies.
  static AnalyticField sinusoid(std::vector<double> omega) {
    if (omega.empty()) throw argument_error("sinusoid: at least one frequency");
    AnalyticField f(Kind::sinusoid, omega.size());
    f.omega_ = std::move(omega);
    return f;
  }

  /// c * f. Polynomial coefficients stay exact.
  AnalyticField scaled(double c) const {
    AnalyticField g = *this;
    if (kind_ == Kind::polynomial) {
      const Rational rc(c);
      for (std::size_t i = 0; i < g.terms_.size(); ++i) {
        g.terms_[i].coefficient *= rc;
        g.coeff_values_[i] = g.terms_[i].coefficient.convert_to<double>();
      }
    } else {
      g.amplitude_ *= c;
    }
    return g;
  }

  AnalyticField restricted_to(Box box) const {
    if (box.dimension() != n_) throw argument_error("restricted_to: dimension mismatch");
    AnalyticField g = *this;
    g.box_ = std::move(box);
    return g;
  }

  AnalyticField with_max_order(int order) const {
    if (order < 0) throw argument_error("max_order must be nonnegative");
    AnalyticField g = *this;
    g.max_order_ = order;
    return g;
  }

  AnalyticField named(std::string name) const {
    AnalyticField g = *this;
    g.name_ = std::move(name);
    return g;
  }

  Kind kind() const { return kind_; }
  std::size_t dimension() const { return n_; }
  int max_order() const { return max_order_; }
  const Box& box() const { return box_; }
  const std::string& name() const { return name_; }
  double amplitude() const { return amplitude_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  const std::vector<double>& coefficient_values() const { return coeff_values_; }
  double gaussian_rate() const { return rate_; }
  double power_exponent() const { return exponent_; }
  const Point& power_center() const { return center_; }
  const std::vector<double>& frequencies() const { return omega_; }

  /// Total degree of a polynomial field; -1 for the zero polynomial.
  int degree() const {
    if (kind_ != Kind::polynomial) throw argument_error("degree: not a polynomial field");
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.degree());
    return d;
  }

  bool in_domain(const Point& x) const {
    if (x.size() != n_ || !box_.contains(x)) return false;
    if (kind_ == Kind::power && distance(x, center_) < kPowerExclusionRadius) return false;
    return true;
  }

  void require_in_domain(const Point& x) const {
    if (x.size() != n_)
      throw argument_error("field " + name_ + ": expected a point of dimension " + std::to_string(n_));
    if (!in_domain(x)) throw domain_error("field " + name_ + ": point outside domain");
  }

  /// f(x); equivalent to eval(*this, x).
  double operator()(const Point& x) const;

 private:
  AnalyticField(Kind kind, std::size_t n) : kind_(kind), n_(n), box_(Box::unbounded(n)) {
    if (n == 0) throw argument_error("field dimension must be at least 1");
  }

  Kind kind_;
  std::size_t n_;
  Box box_;
  int max_order_ = kDefaultMaxOrder;
  double amplitude_ = 1.0;
  std::string name_;
  std::vector<Monomial> terms_;
  std::vector<double> coeff_values_;
  double rate_ = 0.0;
  double exponent_ = 0.0;
  Point center_;
  std::vector<double> omega_;
};

namespace detail {

inline double factorial(int k) {
  double r = 1.0;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

inline double ipow(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

inline double binomial_real(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Truncated product of two power series.
template <class T>
void multiply_series(std::vector<T>& acc, const std::vector<T>& factor) {
  const std::size_t order = acc.size() - 1;
  std::vector<T> out(acc.size(), T(0));
  for (std::size_t i = 0; i <= order; ++i) {
    if (acc[i] == 0) continue;
    for (std::size_t j = 0; j + i <= order && j < factor.size(); ++j) out[i + j] += acc[i] * factor[j];
  }
  acc = std::move(out);
}

/// Taylor coefficients in u of sum_k c_k prod_i (p_i + u h_i)^{e_i}, up to `order`.
template <class T>
std::vector<T> polynomial_line_series(const std::vector<Monomial>& terms, const std::vector<T>& coeffs,
                                      const std::vector<T>& p, const std::vector<T>& h, int order) {
  std::vector<T> total(static_cast<std::size_t>(order) + 1, T(0));
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const auto& exps = terms[t].exponents;
    std::vector<T> series(static_cast<std::size_t>(order) + 1, T(0));
    series[0] = coeffs[t];
    for (std::size_t a = 0; a < exps.size(); ++a) {
      const int e = exps[a];
      if (e == 0) continue;
      // (p + u h)^e = sum_k C(e,k) p^{e-k} h^k u^k
      std::vector<T> factor(static_cast<std::size_t>(std::min(e, order)) + 1);
      std::vector<T> ppow(static_cast<std::size_t>(e) + 1);
      ppow[0] = T(1);
      for (int j = 1; j <= e; ++j) ppow[j] = ppow[j - 1] * p[a];
      T hk(1);
      T binom(1);
      for (int k = 0; k < static_cast<int>(factor.size()); ++k) {
        factor[k] = binom * ppow[e - k] * hk;
        hk *= h[a];
        binom = binom * T(e - k) / T(k + 1);
      }
      multiply_series(series, factor);
    }
    for (std::size_t k = 0; k < total.size(); ++k) total[k] += series[k];
  }
  return total;
}

/// Series of exp(v(u)) where v is a quadratic in u with coefficients v0, v1, v2.
inline std::vector<double> exp_quadratic_series(double v0, double v1, double v2, int order) {
  std::vector<double> w(static_cast<std::size_t>(order) + 1, 0.0);
  const double v[3] = {v0, v1, v2};
  w[0] = std::exp(v0);
  for (int k = 1; k <= order; ++k) {
    double s = 0.0;
    for (int j = 1; j <= std::min(k, 2); ++j) s += j * v[j] * w[k - j];
    w[k] = s / k;
  }
  return w;
}

/// Series of q(u)^beta where q is a quadratic with q0 > 0.
inline std::vector<double> pow_quadratic_series(double q0, double q1, double q2, double beta, int order) {
  std::vector<double> w(static_cast<std::size_t>(order) + 1, 0.0);
  const double q[3] = {q0, q1, q2};
  w[0] = std::pow(q0, beta);
  for (int k = 1; k <= order; ++k) {
    double s = 0.0;
    for (int j = 1; j <= std::min(k, 2); ++j) s += ((beta + 1.0) * j - k) * q[j] * w[k - j];
    w[k] = s / (k * q0);
  }
  return w;
}

}  // namespace detail

inline double eval(const AnalyticField& f, const Point& x) {
  f.require_in_domain(x);
  switch (f.kind()) {
    case AnalyticField::Kind::polynomial: {
      double s = 0.0;
      const auto& terms = f.terms();
      for (std::size_t t = 0; t < terms.size(); ++t) {
        double m = f.coefficient_values()[t];
        for (std::size_t a = 0; a < x.size(); ++a) m *= detail::ipow(x[a], terms[t].exponents[a]);
        s += m;
      }
      return s;
    }
    case AnalyticField::Kind::gaussian:
      return f.amplitude() * std::exp(-f.gaussian_rate() * dot(x, x));
    case AnalyticField::Kind::power:
      return f.amplitude() * std::pow(distance(x, f.power_center()), f.power_exponent());
    case AnalyticField::Kind::sinusoid: {
      double s = f.amplitude();
      for (std::size_t a = 0; a < x.size(); ++a) s *= std::sin(f.frequencies()[a] * x[a]);
      return s;
    }
  }
  return 0.0;
}

inline double AnalyticField::operator()(const Point& x) const { return eval(*this, x); }

/// Exact value of a polynomial field at a rational point.
inline Rational eval_exact(const AnalyticField& f, const std::vector<Rational>& x) {
  if (f.kind() != AnalyticField::Kind::polynomial) throw argument_error("eval_exact: polynomial fields only");
  if (x.size() != f.dimension()) throw argument_error("eval_exact: dimension mismatch");
  Rational s(0);
  for (const auto& t : f.terms()) {
    Rational m = t.coefficient;
    for (std::size_t a = 0; a < x.size(); ++a)
      for (int k = 0; k < t.exponents[a]; ++k) m *= x[a];
    s += m;
  }
  return s;
}

/// Taylor coefficients c_0..c_order of s -> f(x + (t + s) h) at s = 0, in
/// double precision. The k-th derivative along the line is k! * c_k.
inline std::vector<double> line_taylor_coefficients(const AnalyticField& f, const Point& x, const Point& h, double t,
                                                    int order) {
  require_same_dimension(x, h, "line_taylor_coefficients");
  if (order < 0) throw argument_error("derivative order must be nonnegative");
  if (order > f.max_order())
    throw unsupported_order("order " + std::to_string(order) + " exceeds max_order " +
                            std::to_string(f.max_order()) + " of field " + f.name());
  const Point p = along(x, h, t);
  f.require_in_domain(p);
  std::vector<double> c;
  switch (f.kind()) {
    case AnalyticField::Kind::polynomial:
      return detail::polynomial_line_series<double>(f.terms(), f.coefficient_values(), p, h, order);
    case AnalyticField::Kind::gaussian: {
      const double a = f.gaussian_rate();
      c = detail::exp_quadratic_series(-a * dot(p, p), -2.0 * a * dot(p, h), -a * dot(h, h), order);
      break;
    }
    case AnalyticField::Kind::power: {
      const Point q = p - f.power_center();
      c = detail::pow_quadratic_series(dot(q, q), 2.0 * dot(q, h), dot(h, h), 0.5 * f.power_exponent(), order);
      break;
    }
    case AnalyticField::Kind::sinusoid: {
      c.assign(static_cast<std::size_t>(order) + 1, 0.0);
      c[0] = 1.0;
      for (std::size_t a = 0; a < p.size(); ++a) {
        const double w = f.frequencies()[a];
        const double phase = w * p[a];
        const double sp = std::sin(phase);
        const double cp = std::cos(phase);
        // d^k/du^k sin(phase + w h u) = (w h)^k sin(phase + k pi/2)
        std::vector<double> factor(c.size());
        double scale = 1.0;
        for (std::size_t k = 0; k < factor.size(); ++k) {
          const double cyc[4] = {sp, cp, -sp, -cp};
          factor[k] = scale * cyc[k % 4];
          scale *= w * h[a] / static_cast<double>(k + 1);
        }
        detail::multiply_series(c, factor);
      }
      break;
    }
  }
  for (double& v : c) v *= f.amplitude();
  return c;
}

/// l-th derivative of s -> f(x + s h) at s = t, i.e. grad^l f(x + t h)(h, ..., h).
/// Polynomial fields are differentiated in exact rational arithmetic and
/// rounded once at the end.
inline double directional_derivative(const AnalyticField& f, const Point& x, const Point& h, int l, double t) {
  require_same_dimension(x, h, "directional_derivative");
  if (l < 0) throw argument_error("derivative order must be nonnegative");
  if (l > f.max_order())
    throw unsupported_order("order " + std::to_string(l) + " exceeds max_order " + std::to_string(f.max_order()) +
                            " of field " + f.name());
  if (f.kind() != AnalyticField::Kind::polynomial)
    return detail::factorial(l) * line_taylor_coefficients(f, x, h, t, l)[static_cast<std::size_t>(l)];

  f.require_in_domain(along(x, h, t));
  if (l > f.degree()) return 0.0;
  const Rational rt(t);
  std::vector<Rational> p(x.size()), rh(h.size()), coeffs;
  for (std::size_t a = 0; a < x.size(); ++a) {
    rh[a] = Rational(h[a]);
    p[a] = Rational(x[a]) + rt * rh[a];
  }
  coeffs.reserve(f.terms().size());
  for (const auto& term : f.terms()) coeffs.push_back(term.coefficient);
  Rational d = detail::polynomial_line_series<Rational>(f.terms(), coeffs, p, rh, l)[static_cast<std::size_t>(l)];
  for (int k = 2; k <= l; ++k) d *= k;
  return d.convert_to<double>();
}

/// values[i] = transform(f(x_i)) over every grid point.
inline SampledField sample(const AnalyticField& f, const GridSpec& grid,
                           const std::function<double(double)>& transform = {}, unsigned workers = 1) {
  if (grid.dimension() != f.dimension()) throw argument_error("sample: grid and field dimensions differ");
  std::vector<double> values(grid.size());
  parallel_for(grid.size(), workers, [&](std::size_t i) {
    const double v = eval(f, grid.point(i));
    values[i] = transform ? transform(v) : v;
  });
  return SampledField(grid, std::move(values));
}

/// Direction set used to approximate the sup over unit vectors e of
/// |grad^m f(x)(e, ..., e)|. Directions are distinct up to sign, since the
/// magnitude is invariant under e -> -e.
inline std::vector<Point> default_directions(std::size_t n) {
  std::vector<Point> dirs;
  if (n == 1) return {Point{1.0}};
  if (n == 2) {
    for (int k = 0; k < 64; ++k) {
      const double th = std::numbers::pi * k / 64.0;
      dirs.push_back({std::cos(th), std::sin(th)});
    }
    return dirs;
  }
  // Axes, then every sign pattern with a nonzero leading entry (face and body
  // diagonals in 3-D).
  for (std::size_t a = 0; a < n; ++a) {
    Point e(n, 0.0);
    e[a] = 1.0;
    dirs.push_back(e);
  }
  std::size_t patterns = 1;
  for (std::size_t a = 0; a < n; ++a) patterns *= 3;
  for (std::size_t code = 0; code < patterns; ++code) {
    Point e(n);
    std::size_t c = code, nonzero = 0;
    for (std::size_t a = 0; a < n; ++a, c /= 3) {
      e[a] = static_cast<double>(static_cast<int>(c % 3) - 1);
      if (e[a] != 0.0) ++nonzero;
    }
    if (nonzero < 2) continue;
    const auto lead = std::find_if(e.begin(), e.end(), [](double v) { return v != 0.0; });
    if (*lead < 0.0) continue;
    if (n > 3 && nonzero != n) continue;  // keep the set small beyond 3-D: axes + body diagonals
    const double s = 1.0 / std::sqrt(static_cast<double>(nonzero));
    for (double& v : e) v *= s;
    dirs.push_back(e);
  }
  return dirs;
}

/// |grad^m f| at every grid point, as the max over `directions` of the m-th
/// derivative along each unit direction.
inline SampledField gradient_magnitude_field(const AnalyticField& f, const GridSpec& grid, int m,
                                             const std::vector<Point>& directions, unsigned workers = 1) {
  if (directions.empty()) throw config_error("gradient_magnitude_field: empty direction set");
  for (const auto& e : directions) {
    if (e.size() != f.dimension()) throw config_error("gradient_magnitude_field: direction dimension mismatch");
    if (std::abs(norm(e) - 1.0) > 1e-12) throw config_error("gradient_magnitude_field: directions must be unit vectors");
  }
  if (grid.dimension() != f.dimension()) throw argument_error("gradient_magnitude_field: grid dimension mismatch");
  if (m < 0) throw argument_error("gradient_magnitude_field: order must be nonnegative");
  const double mfact = detail::factorial(m);
  std::vector<double> values(grid.size());
  parallel_for(grid.size(), workers, [&](std::size_t i) {
    const Point x = grid.point(i);
    double best = 0.0;
    for (const auto& e : directions) {
      const auto c = line_taylor_coefficients(f, x, e, 0.0, m);
      best = std::max(best, std::abs(mfact * c[static_cast<std::size_t>(m)]));
    }
    values[i] = best;
  });
  return SampledField(grid, std::move(values));
}

}  // namespace lagsob

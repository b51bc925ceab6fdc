#pragma once

// Randomized checks of the exact finite-difference identities.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "lagsob/difference.hpp"
#include "lagsob/field.hpp"
#include "lagsob/field_parse.hpp"
#include "lagsob/quadrature.hpp"
#include "lagsob/sampling.hpp"

namespace lagsob {

struct IdentityResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::size_t draws = 0;
  bool pass = true;
};

struct IdentityOptions {
  std::size_t draws = 1000;
  std::uint64_t seed = 1;
  int max_order = 6;
  int max_integral_order = 4;
  double max_step = 0.25;  // per-coordinate bound on h
};

inline nlohmann::json to_json(const IdentityResult& r) {
  return {{"name", r.name},
          {"max_residual", r.max_residual},
          {"tolerance", r.tolerance},
          {"draws", r.draws},
          {"pass", r.pass}};
}

/// Default identity corpus: the scan corpora for n = 1, 2, 3 plus
/// polynomials of degree up to 6.
inline std::vector<AnalyticField> default_identity_corpus() {
  std::vector<AnalyticField> out;
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& spec : default_corpus(n)) out.push_back(parse_field(spec, n));
  for (const char* spec : {"poly:x0^6-3*x0^4+x0-1/3", "poly:2*x0^5-x0^2",
                           "poly:x0^2*x1^4-x0^5*x1+2", "poly:x0^3*x1^3-4*x1^2+x0",
                           "poly:x0^2*x1^2*x2^2-x0*x2^5+x1^3", "poly:x0*x1^2*x2^3+0.5*x2^4-x0^6"})
    out.push_back(parse_field(spec));
  return out;
}

namespace detail {

struct IdentityDraw {
  const AnalyticField* f;
  Point x;
  Point h;
  int l;
};

/// Draws f from the corpus, x in [-1,1]^n, h with coordinates in
/// [-max_step, max_step] and l in [1, max_l], until every node x + j h
/// (j = 0..l) is in f's domain.
class IdentitySampler {
 public:
  IdentitySampler(const std::vector<const AnalyticField*>& corpus, std::uint64_t seed, double max_step)
      : corpus_(corpus), rng_(seed), max_step_(max_step) {}

  IdentityDraw next(int max_l) {
    while (true) {
      const auto* f = corpus_[std::min(corpus_.size() - 1, static_cast<std::size_t>(rng_.next() * corpus_.size()))];
      const std::size_t n = f->dimension();
      Point x(n), h(n);
      for (auto& v : x) v = rng_.next(-1.0, 1.0);
      for (auto& v : h) v = rng_.next(-max_step_, max_step_);
      const int l = 1 + std::min(max_l - 1, static_cast<int>(rng_.next() * max_l));
      if (is_zero(h)) continue;
      bool ok = true;
      for (int j = 0; j <= l && ok; ++j) ok = f->in_domain(along(x, h, j));
      if (ok) return {f, std::move(x), std::move(h), l};
    }
  }

 private:
  std::vector<const AnalyticField*> corpus_;
  UniformSource rng_;
  double max_step_;
};

inline void record(IdentityResult& r, double residual) {
  ++r.draws;
  if (!(residual <= r.max_residual)) r.max_residual = std::isnan(residual) ? HUGE_VAL : residual;
  r.pass = r.max_residual <= r.tolerance;
}

}  // namespace detail

/// |lagrange_remainder - forward_difference| / (1 + |forward_difference|).
inline IdentityResult check_lagrange_difference(const std::vector<AnalyticField>& corpus, const IdentityOptions& opt) {
  IdentityResult r{"lagrange_difference", 0.0, 1e-10};
  std::vector<const AnalyticField*> fs;
  for (const auto& f : corpus) fs.push_back(&f);
  if (fs.empty()) return r;
  detail::IdentitySampler draws(fs, opt.seed, opt.max_step);
  for (std::size_t i = 0; i < opt.draws; ++i) {
    const auto d = draws.next(opt.max_order);
    const Point y = along(d.x, d.h, d.l);
    const double fd = forward_difference(*d.f, d.x, d.h, d.l);
    detail::record(r, std::abs(lagrange_remainder(*d.f, d.x, y, d.l) - fd) / (1.0 + std::abs(fd)));
  }
  return r;
}

/// Pascal telescoping g(x, k-1) - g(x+h, k-1) = (-1)^k D_h^k f(x), relative.
inline IdentityResult check_telescoping(const std::vector<AnalyticField>& corpus, const IdentityOptions& opt) {
  IdentityResult r{"telescoping", 0.0, 1e-12};
  std::vector<const AnalyticField*> fs;
  for (const auto& f : corpus) fs.push_back(&f);
  if (fs.empty()) return r;
  detail::IdentitySampler draws(fs, opt.seed + 1, opt.max_step);
  for (std::size_t i = 0; i < opt.draws; ++i) {
    const auto d = draws.next(opt.max_order);
    const double fd = forward_difference(*d.f, d.x, d.h, d.l);
    detail::record(r, std::abs(telescope_residual(*d.f, d.x, d.h, d.l)) / (1.0 + std::abs(fd)));
  }
  return r;
}

/// g_integral against forward_difference for both quadrature paths, and the
/// two paths against each other. Polynomial fields only.
inline IdentityResult check_integral_representation(const std::vector<AnalyticField>& corpus,
                                                    const IdentityOptions& opt) {
  IdentityResult r{"integral_representation", 0.0, 1e-9};
  std::vector<const AnalyticField*> fs;
  for (const auto& f : corpus)
    if (f.kind() == AnalyticField::Kind::polynomial) fs.push_back(&f);
  if (fs.empty()) return r;
  detail::IdentitySampler draws(fs, opt.seed + 2, opt.max_step);
  for (std::size_t i = 0; i < opt.draws; ++i) {
    const auto d = draws.next(opt.max_integral_order);
    const double fd = forward_difference(*d.f, d.x, d.h, d.l);
    const double gt = g_integral(*d.f, d.x, d.h, d.l, QuadratureRule::defaults(QuadratureRule::Kind::tensor_gauss_legendre, d.l));
    const double gi = g_integral(*d.f, d.x, d.h, d.l, QuadratureRule::defaults(QuadratureRule::Kind::irwin_hall, d.l));
    const double scale = 1.0 + std::abs(fd);
    detail::record(r, std::max({std::abs(gt - fd), std::abs(gi - fd), std::abs(gt - gi)}) / scale);
  }
  return r;
}

/// D_h^l p = 0 exactly for l > deg p, in rational arithmetic.
inline IdentityResult check_annihilation(const std::vector<AnalyticField>& corpus, const IdentityOptions& opt) {
  IdentityResult r{"annihilation", 0.0, 0.0};
  std::vector<const AnalyticField*> fs;
  for (const auto& f : corpus)
    if (f.kind() == AnalyticField::Kind::polynomial && f.degree() < opt.max_order) fs.push_back(&f);
  if (fs.empty()) return r;
  UniformSource rng(opt.seed + 3);
  detail::IdentitySampler draws(fs, opt.seed + 4, opt.max_step);
  for (std::size_t i = 0; i < opt.draws; ++i) {
    auto d = draws.next(1);
    const int lo = d.f->degree() + 1;
    const int l = lo + std::min(opt.max_order - lo, static_cast<int>(rng.next() * (opt.max_order - lo + 1)));
    std::vector<Rational> x, h;
    for (double v : d.x) x.emplace_back(v);
    for (double v : d.h) h.emplace_back(v);
    detail::record(r, std::abs(forward_difference_exact(*d.f, x, h, l).convert_to<double>()));
  }
  return r;
}

/// D_h^l t^l = l! h^l on dyadic x and h, where both sides are exact.
inline IdentityResult check_leading_coefficient(const IdentityOptions& opt) {
  IdentityResult r{"leading_coefficient", 0.0, 1e-12};
  UniformSource rng(opt.seed + 5);
  for (std::size_t i = 0; i < opt.draws; ++i) {
    const int l = 1 + std::min(opt.max_order - 1, static_cast<int>(rng.next() * opt.max_order));
    const double x = std::floor(rng.next(-16.0, 16.0)) / 16.0;
    double h = std::floor(rng.next(-8.0, 8.0)) / 32.0;
    if (h == 0.0) h = 1.0 / 32.0;
    std::vector<int> e{l};
    const auto f = AnalyticField::polynomial(1, {Monomial{Rational(1), e}});
    const double expect = detail::factorial(l) * std::pow(h, l);
    detail::record(r, std::abs(forward_difference(f, {x}, {h}, l) - expect) / (1.0 + std::abs(expect)));
  }
  return r;
}

inline std::vector<IdentityResult> run_identities(const std::vector<AnalyticField>& corpus,
                                                  const IdentityOptions& opt = {}) {
  return {check_lagrange_difference(corpus, opt), check_telescoping(corpus, opt),
          check_integral_representation(corpus, opt), check_annihilation(corpus, opt),
          check_leading_coefficient(opt)};
}

}  // namespace lagsob

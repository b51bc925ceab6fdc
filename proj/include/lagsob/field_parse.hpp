#pragma once

// Text form of corpus fields, as accepted by --field:
//
//   poly:<expr>          e.g. poly:1+2*x0^2*x1, poly:x0^3-1/3*x0, poly:0.5*x1
//   gauss:a=<rate>       exp(-a|x|^2)
//   pow:alpha=<a>[,c=<c0>[,<c1>...]]
//                        |x-c|^alpha; a single c value is broadcast to every axis
//   sin:w=<w0>[,<w1>...] prod_i sin(w_i x_i)
//
// gauss, pow and sin also accept amp=<v>. In a parameter list a bare value
// continues the list of the preceding key, so "sin:w=3,2" has w = (3, 2).
// Polynomial coefficients are exact: decimals and p/q fractions are read as
// rationals.

#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lagsob/field.hpp"

namespace lagsob {

namespace detail {

inline bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

/// Parses an unsigned decimal literal ("12", "0.25", ".5") exactly.
inline Rational parse_decimal(std::string_view s) {
  if (s.empty()) throw parse_error("expected a number");
  std::string digits;
  std::size_t frac_digits = 0;
  bool seen_point = false;
  for (char c : s) {
    if (c == '.') {
      if (seen_point) throw parse_error("malformed number '" + std::string(s) + "'");
      seen_point = true;
    } else if (is_digit(c)) {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else {
      throw parse_error("malformed number '" + std::string(s) + "'");
    }
  }
  if (digits.empty()) throw parse_error("malformed number '" + std::string(s) + "'");
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));  // no octal reading
  boost::multiprecision::mpz_int num(digits);
  boost::multiprecision::mpz_int den = 1;
  for (std::size_t i = 0; i < frac_digits; ++i) den *= 10;
  return Rational(num, den);
}

/// Unsigned rational literal: decimal, or decimal '/' decimal.
inline Rational parse_rational(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return parse_decimal(s);
  const Rational den = parse_decimal(s.substr(slash + 1));
  if (den == 0) throw parse_error("zero denominator in '" + std::string(s) + "'");
  return parse_decimal(s.substr(0, slash)) / den;
}

inline double parse_real(std::string_view s) {
  const std::string str(s);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(str, &used);
  } catch (const std::exception&) {
    throw parse_error("expected a real number, got '" + str + "'");
  }
  if (used != str.size()) throw parse_error("expected a real number, got '" + str + "'");
  return v;
}

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) : text_(text) {}

  std::vector<std::pair<Rational, std::map<std::size_t, int>>> parse() {
    std::vector<std::pair<Rational, std::map<std::size_t, int>>> terms;
    skip_space();
    if (at_end()) throw parse_error("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        throw parse_error("expected '+' or '-' at position " + std::to_string(pos_));
      }
      auto term = parse_term();
      term.first *= sign;
      terms.push_back(std::move(term));
      first = false;
      skip_space();
    }
    return terms;
  }

 private:
  std::pair<Rational, std::map<std::size_t, int>> parse_term() {
    Rational coeff(1);
    std::map<std::size_t, int> exps;
    while (true) {
      skip_space();
      if (at_end()) throw parse_error("dangling operator in polynomial");
      if (peek() == 'x') {
        ++pos_;
        const std::size_t axis = static_cast<std::size_t>(read_integer("variable index"));
        int e = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_space();
          e = static_cast<int>(read_integer("exponent"));
        }
        exps[axis] += e;
      } else if (is_digit(peek()) || peek() == '.') {
        const std::size_t start = pos_;
        while (!at_end() && (is_digit(peek()) || peek() == '.' || peek() == '/')) ++pos_;
        coeff *= parse_rational(text_.substr(start, pos_ - start));
      } else {
        throw parse_error("unexpected character '" + std::string(1, peek()) + "' in polynomial");
      }
      skip_space();
      if (at_end() || peek() != '*') break;
      ++pos_;
    }
    return {coeff, exps};
  }

  long read_integer(const char* what) {
    const std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    if (start == pos_) throw parse_error(std::string("expected ") + what + " at position " + std::to_string(start));
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline std::map<std::string, std::vector<double>> parse_params(std::string_view body) {
  std::map<std::string, std::vector<double>> params;
  std::string current;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t end = body.find(',', start);
    if (end == std::string_view::npos) end = body.size();
    const std::string_view item = body.substr(start, end - start);
    if (item.empty()) throw parse_error("empty parameter in '" + std::string(body) + "'");
    const auto eq = item.find('=');
    if (eq != std::string_view::npos) {
      current = std::string(item.substr(0, eq));
      if (params.count(current)) throw parse_error("duplicate parameter '" + current + "'");
      params[current].push_back(parse_real(item.substr(eq + 1)));
    } else {
      if (current.empty()) throw parse_error("value '" + std::string(item) + "' without a key");
      params[current].push_back(parse_real(item));
    }
    start = end + 1;
  }
  return params;
}

inline double single_param(const std::map<std::string, std::vector<double>>& params, const std::string& key,
                           std::optional<double> fallback = std::nullopt) {
  const auto it = params.find(key);
  if (it == params.end()) {
    if (fallback) return *fallback;
    throw parse_error("missing parameter '" + key + "'");
  }
  if (it->second.size() != 1) throw parse_error("parameter '" + key + "' takes one value");
  return it->second.front();
}

inline void reject_unknown(const std::map<std::string, std::vector<double>>& params,
                           std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, _] : params) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) throw parse_error("unknown parameter '" + key + "'");
  }
}

}  // namespace detail

/// Parses a field spec. `n` is the ambient dimension; 0 infers it from the
/// spec (highest variable index for poly, frequency count for sin, 1 otherwise).
inline AnalyticField parse_field(std::string_view spec, std::size_t n = 0) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw parse_error("field spec '" + std::string(spec) + "' lacks 'kind:'");
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view body = spec.substr(colon + 1);
  const std::string name(spec);

  if (kind == "poly") {
    auto raw = detail::PolynomialParser(body).parse();
    std::size_t dim = n;
    if (dim == 0) {
      dim = 1;
      for (const auto& [c, exps] : raw)
        if (!exps.empty()) dim = std::max(dim, exps.rbegin()->first + 1);
    }
    std::vector<Monomial> terms;
    for (auto& [c, exps] : raw) {
      Monomial m{c, std::vector<int>(dim, 0)};
      for (const auto& [axis, e] : exps) {
        if (axis >= dim)
          throw parse_error("variable x" + std::to_string(axis) + " exceeds dimension " + std::to_string(dim));
        m.exponents[axis] = e;
      }
      terms.push_back(std::move(m));
    }
    return AnalyticField::polynomial(dim, std::move(terms)).named(name);
  }

  const auto params = detail::parse_params(body);
  AnalyticField f = [&] {
    if (kind == "gauss") {
      detail::reject_unknown(params, {"a", "amp"});
      return AnalyticField::gaussian(n == 0 ? 1 : n, detail::single_param(params, "a"));
    }
    if (kind == "pow") {
      detail::reject_unknown(params, {"alpha", "c", "amp"});
      const std::size_t dim = n == 0 ? 1 : n;
      Point center(dim, 0.0);
      if (auto it = params.find("c"); it != params.end()) {
        if (it->second.size() == 1) {
          center.assign(dim, it->second.front());
        } else if (it->second.size() == dim) {
          center = it->second;
        } else {
          throw parse_error("pow: c needs 1 or " + std::to_string(dim) + " values");
        }
      }
      return AnalyticField::power(dim, detail::single_param(params, "alpha"), center);
    }
    if (kind == "sin") {
      detail::reject_unknown(params, {"w", "amp"});
      const auto it = params.find("w");
      if (it == params.end()) throw parse_error("sin: missing parameter 'w'");
      std::vector<double> w = it->second;
      if (n != 0 && w.size() == 1) w.assign(n, w.front());
      if (n != 0 && w.size() != n)
        throw parse_error("sin: " + std::to_string(w.size()) + " frequencies for dimension " + std::to_string(n));
      return AnalyticField::sinusoid(w);
    }
    throw parse_error("unknown field kind '" + std::string(kind) + "'");
  }();
  return f.scaled(detail::single_param(params, "amp", 1.0)).named(name);
}

/// Named test functions used by the identity and scan suites.
inline std::vector<std::string> default_corpus(std::size_t n) {
  switch (n) {
    case 1:
      return {"poly:x0^3-x0", "poly:x0^2", "gauss:a=1", "pow:alpha=1.5,c=2", "sin:w=3"};
    case 2:
      return {"poly:1+2*x0^2*x1", "poly:x0^3-x0*x1^2", "gauss:a=1", "pow:alpha=1.5,c=2", "sin:w=3,2"};
    case 3:
      return {"poly:1+x0*x1*x2+x2^3", "gauss:a=1", "pow:alpha=2.5,c=2", "sin:w=2,1,3"};
    default:
      return {"poly:1+x0*x1*x2+x2^3", "gauss:a=1", "pow:alpha=2.5,c=2", "sin:w=2"};
  }
}

}  // namespace lagsob

#pragma once

// Command-line front end: `identities`, `verify`, `geometry`, `mollify`, `triebel`.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lagsob/identities.hpp"
#include "lagsob/lagsob.hpp"

namespace lagsob::cli {

enum ExitCode : int { kPass = 0, kFailure = 1, kUsage = 2, kInfeasible = 3 };

using nlohmann::json;

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline double number(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw parse_error(what + ": '" + s + "' is not a number");
  }
  if (used != s.size() || !std::isfinite(v)) throw parse_error(what + ": '" + s + "' is not a finite number");
  return v;
}

/// "[N*]spec,..." with N* repeating an entry N times.
inline std::vector<std::string> expand_axes(const std::string& s, const std::string& what) {
  std::vector<std::string> out;
  for (const auto& part : split(s, ',')) {
    const auto star = part.find('*');
    if (star == std::string::npos) {
      out.push_back(part);
      continue;
    }
    const double reps = number(part.substr(0, star), what);
    if (reps < 1 || reps != std::floor(reps) || reps > 16) throw parse_error(what + ": bad repeat count in '" + part + "'");
    for (int k = 0; k < static_cast<int>(reps); ++k) out.push_back(part.substr(star + 1));
  }
  return out;
}

}  // namespace detail

/// "lo:hi:points" per axis, comma separated; "2*-1:1:201" is the 201^2 grid on [-1,1]^2.
inline GridSpec parse_grid(const std::string& s) {
  Point lo, hi;
  std::vector<std::size_t> pts;
  for (const auto& axis : detail::expand_axes(s, "grid")) {
    const auto f = detail::split(axis, ':');
    if (f.size() != 3) throw parse_error("grid: expected lo:hi:points, got '" + axis + "'");
    lo.push_back(detail::number(f[0], "grid"));
    hi.push_back(detail::number(f[1], "grid"));
    const double p = detail::number(f[2], "grid");
    if (p < 2 || p != std::floor(p)) throw parse_error("grid: point count must be an integer >= 2");
    pts.push_back(static_cast<std::size_t>(p));
  }
  return GridSpec(lo, hi, pts);
}

/// "lo:hi" per axis, comma separated, with the same N* shorthand.
inline Box parse_box(const std::string& s) {
  Box b;
  for (const auto& axis : detail::expand_axes(s, "box")) {
    const auto f = detail::split(axis, ':');
    if (f.size() != 2) throw parse_error("box: expected lo:hi, got '" + axis + "'");
    b.lo.push_back(detail::number(f[0], "box"));
    b.hi.push_back(detail::number(f[1], "box"));
  }
  return b;
}

/// "box" (the grid box), "box:<ranges>", or "hole:<ranges>" (grid box minus a closed box).
inline Domain parse_domain(const std::string& s, const GridSpec& grid) {
  if (s == "box") return Domain::box(grid.box());
  auto check = [&](const Box& b) {
    if (b.dimension() != grid.dimension()) throw parse_error("domain: dimension differs from the grid");
    return b;
  };
  if (s.rfind("box:", 0) == 0) return Domain::box(check(parse_box(s.substr(4))));
  if (s.rfind("hole:", 0) == 0) return Domain::box_with_hole(grid.box(), check(parse_box(s.substr(5))));
  throw parse_error("domain: expected box, box:<ranges> or hole:<ranges>, got '" + s + "'");
}

/// A Lebesgue exponent in [1, inf]; "inf" is accepted.
inline double parse_exponent(const std::string& s) {
  if (s == "inf" || s == "infinity") return HUGE_VAL;
  const double p = detail::number(s, "p");
  if (p < 1.0) throw parse_error("p must be at least 1");
  return p;
}

inline json exponent_json(double p) {
  if (std::isinf(p)) return "inf";
  return p;
}

struct RunConfig {
  std::string command;
  std::vector<std::string> fields;  // empty: default corpus
  std::string grid = "-1:1:201";
  int m = 1;
  std::optional<double> s;          // default: m
  std::vector<double> p;            // mollify: default {1, 1.5, 2, 4, inf}
  std::vector<double> delta;        // empty: default ladder for the grid
  std::vector<double> eps;          // empty: {0.4, 0.2, 0.1} * shortest side / 4, resolved ones only
  std::size_t pairs = 2000;
  std::uint64_t seed = 1;
  std::optional<double> min_sep;    // default: 2 grid spacings
  std::optional<double> max_sep;    // default: largest delta
  double slack = kDefaultSlack;
  std::string domain = "box";
  std::string interpolation = "multilinear";
  std::string out;
  std::string format = "json";
  unsigned workers = default_workers();
  std::size_t draws = 1000;
  std::optional<double> g;          // triebel: constant g for an extra triebel_scan

  /// Every key the config file may carry.
  static const std::vector<std::string>& keys() {
    static const std::vector<std::string> k{"field", "grid",    "m",     "s",      "p",      "delta",
                                            "eps",   "pairs",   "seed",  "min_sep", "max_sep", "slack",
                                            "domain", "interpolation", "out", "format", "workers", "draws", "g"};
    return k;
  }

  /// Overwrites the members present in `j`.
  void merge(const json& j) {
    if (!j.is_object()) throw parse_error("config: expected a JSON object");
    for (const auto& [key, _] : j.items())
      if (std::find(keys().begin(), keys().end(), key) == keys().end())
        throw parse_error("config: unknown key '" + key + "'");
    try {
      if (j.contains("field")) {
        const auto& v = j["field"];
        fields = v.is_array() ? v.get<std::vector<std::string>>() : std::vector<std::string>{v.get<std::string>()};
      }
      if (j.contains("grid")) grid = j["grid"].get<std::string>();
      if (j.contains("m")) m = j["m"].get<int>();
      if (j.contains("s")) s = j["s"].get<double>();
      if (j.contains("p")) {
        p.clear();
        const json v = j["p"].is_array() ? j["p"] : json::array({j["p"]});
        for (const auto& e : v) p.push_back(e.is_string() ? parse_exponent(e.get<std::string>()) : e.get<double>());
      }
      if (j.contains("delta")) delta = j["delta"].get<std::vector<double>>();
      if (j.contains("eps")) eps = j["eps"].get<std::vector<double>>();
      if (j.contains("pairs")) pairs = j["pairs"].get<std::size_t>();
      if (j.contains("seed")) seed = j["seed"].get<std::uint64_t>();
      if (j.contains("min_sep")) min_sep = j["min_sep"].get<double>();
      if (j.contains("max_sep")) max_sep = j["max_sep"].get<double>();
      if (j.contains("slack")) slack = j["slack"].get<double>();
      if (j.contains("domain")) domain = j["domain"].get<std::string>();
      if (j.contains("interpolation")) interpolation = j["interpolation"].get<std::string>();
      if (j.contains("out")) out = j["out"].get<std::string>();
      if (j.contains("format")) format = j["format"].get<std::string>();
      if (j.contains("workers")) workers = j["workers"].get<unsigned>();
      if (j.contains("draws")) draws = j["draws"].get<std::size_t>();
      if (j.contains("g")) g = j["g"].get<double>();
    } catch (const json::exception& e) {
      throw parse_error(std::string("config: ") + e.what());
    }
  }

  json to_json() const {
    json p_json = json::array();
    for (double v : p) p_json.push_back(exponent_json(v));
    json j{{"field", fields}, {"grid", grid},       {"m", m},         {"p", p_json},
           {"delta", delta},  {"eps", eps},         {"pairs", pairs}, {"seed", seed},
           {"slack", slack},  {"domain", domain},   {"interpolation", interpolation},
           {"format", format}, {"workers", workers}, {"draws", draws}};
    if (s) j["s"] = *s;
    if (min_sep) j["min_sep"] = *min_sep;
    if (max_sep) j["max_sep"] = *max_sep;
    if (g) j["g"] = *g;
    if (!out.empty()) j["out"] = out;
    return j;
  }
};

/// Everything a command needs, validated before any computation starts.
struct Resolved {
  RunConfig config;  // with defaults filled in
  GridSpec grid;
  std::vector<AnalyticField> fields;
  ScanConfig scan;
  PairSampler sampler;
};

inline Resolved resolve(RunConfig c) {
  if (c.format != "json" && c.format != "csv") throw parse_error("format must be json or csv");
  if (c.m < 1) throw argument_error("m must be at least 1");
  if (c.pairs == 0) throw argument_error("pairs must be positive");
  if (c.draws == 0) throw argument_error("draws must be positive");
  if (c.workers == 0) c.workers = default_workers();
  if (c.interpolation != "multilinear" && c.interpolation != "nearest")
    throw parse_error("interpolation must be multilinear or nearest");

  GridSpec grid = parse_grid(c.grid);
  const std::size_t n = grid.dimension();
  if (c.command == "identities") {
    if (c.fields.empty()) {
      for (const auto& f : default_identity_corpus()) c.fields.push_back(f.name());
    }
  } else if (c.fields.empty()) {
    c.fields = default_corpus(n);
  }
  std::vector<AnalyticField> fields;
  for (const auto& spec : c.fields) fields.push_back(parse_field(spec, c.command == "identities" ? 0 : n));

  if (!c.s) c.s = static_cast<double>(c.m);
  if (!(*c.s > 0.0) || *c.s > c.m) throw argument_error("s must satisfy 0 < s <= m");
  if (c.p.empty() && c.command == "mollify") c.p = {1.0, 1.5, 2.0, 4.0, HUGE_VAL};
  for (double p : c.p)
    if (!(p >= 1.0)) throw argument_error("p must be at least 1");
  if (c.delta.empty()) c.delta = ScanConfig::default_ladder(grid);
  if (c.eps.empty() && c.command == "mollify") {
    const double q = grid.min_side() / 4.0;
    for (double e : {0.4 * q, 0.2 * q, 0.1 * q})
      if (2.0 * e >= 8.0 * grid.max_spacing()) c.eps.push_back(e);
    if (c.eps.empty()) throw config_error("grid too coarse for any default eps; pass --eps");
  }
  for (double e : c.eps)
    if (!(e > 0.0)) throw argument_error("eps must be positive");

  ScanConfig scan = ScanConfig::defaults(grid);
  scan.delta_ladder = c.delta;
  scan.slack = c.slack;
  scan.workers = c.workers;
  scan.interpolation = c.interpolation == "nearest" ? Interpolation::nearest : Interpolation::multilinear;
  scan.validate();
  for (double d : c.delta) scan.maximal(grid, d).validate();
  for (double e : c.eps) DiscreteKernel::build(Mollifier::bump(e, n), grid);

  if (!c.min_sep) c.min_sep = 2.0 * grid.max_spacing();
  if (!c.max_sep) c.max_sep = c.delta.back();
  PairSampler sampler{parse_domain(c.domain, grid), c.pairs, c.seed, *c.min_sep, *c.max_sep};
  if (!(sampler.min_separation >= 0.0) || !(sampler.max_separation >= sampler.min_separation))
    throw config_error("need 0 <= min_sep <= max_sep");

  return {std::move(c), std::move(grid), std::move(fields), std::move(scan), std::move(sampler)};
}

namespace detail {

/// Config echoed into reports: everything that determines the numbers.
inline json echoed(const RunConfig& c) {
  json j = c.to_json();
  j.erase("workers");
  j.erase("out");
  j.erase("format");
  return j;
}

inline std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Report rows prefixed with a `report` column naming the scan and field.
inline std::string reports_csv(const std::vector<InequalityReport>& reports) {
  std::ostringstream os;
  bool header = false;
  for (const auto& r : reports) {
    const std::string label = r.name + ":" + r.params.value("field", std::string{});
    std::istringstream rows(to_csv(r));
    std::string line;
    std::getline(rows, line);
    if (!header) {
      os << "report," << line << '\n';
      header = true;
    }
    while (std::getline(rows, line)) os << '"' << label << "\"," << line << '\n';
  }
  return os.str();
}

struct Outcome {
  int code = kPass;
  json document;
  std::string csv;
};

}  // namespace detail

inline detail::Outcome cmd_identities(const Resolved& r) {
  IdentityOptions opt;
  opt.draws = r.config.draws;
  opt.seed = r.config.seed;
  const auto results = run_identities(r.fields, opt);
  detail::Outcome out;
  bool pass = true;
  json list = json::array();
  std::string csv = "name,max_residual,tolerance,draws,pass\n";
  for (const auto& res : results) {
    pass = pass && res.pass;
    list.push_back(to_json(res));
    csv += res.name + "," + detail::csv_number(res.max_residual) + "," + detail::csv_number(res.tolerance) + "," +
           std::to_string(res.draws) + "," + (res.pass ? "true" : "false") + "\n";
  }
  out.code = pass ? kPass : kFailure;
  out.document = {{"command", "identities"}, {"pass", pass}, {"config", detail::echoed(r.config)}, {"identities", list}};
  out.csv = csv;
  return out;
}

inline detail::Outcome cmd_geometry(const Resolved&) {
  json rows = json::array();
  std::string csv = "n,ball_volume,lens_volume,lens_volume_quadrature,C\n";
  for (int n = 1; n <= 5; ++n) {
    const double ball = ball_volume(n, 1.0), lens = lens_volume(n, 1.0, 1.0);
    const double quad = lens_volume_quadrature(n, 1.0, 1.0), c = segment_ratio_constant(n);
    rows.push_back({{"n", n}, {"ball_volume", ball}, {"lens_volume", lens}, {"lens_volume_quadrature", quad}, {"C", c}});
    csv += std::to_string(n) + "," + detail::csv_number(ball) + "," + detail::csv_number(lens) + "," +
           detail::csv_number(quad) + "," + detail::csv_number(c) + "\n";
  }
  detail::Outcome out;
  out.document = {{"command", "geometry"}, {"pass", true}, {"config", json::object()}, {"rows", rows}};
  out.csv = csv;
  return out;
}

namespace detail {

inline Outcome scan_outcome(const std::string& command, const Resolved& r, const std::vector<InequalityReport>& reports,
                            json extra = json::object()) {
  Outcome out;
  bool pass = true;
  json list = json::array();
  for (const auto& rep : reports) {
    pass = pass && rep.passed();
    list.push_back(to_json(rep));
  }
  if (extra.contains("young"))
    for (const auto& y : extra["young"]) pass = pass && y["pass"].get<bool>();
  out.code = pass ? kPass : kFailure;
  out.document = {{"command", command}, {"pass", pass}, {"config", echoed(r.config)}, {"reports", list}};
  for (auto& [k, v] : extra.items()) out.document[k] = v;
  out.csv = reports_csv(reports);
  return out;
}

}  // namespace detail

inline detail::Outcome cmd_verify(const Resolved& r) {
  std::vector<InequalityReport> reports;
  for (const auto& f : r.fields) {
    reports.push_back(main_inequality_scan(f, r.config.m, r.grid, r.scan, r.sampler));
    if (r.config.m == 1) reports.push_back(lemma1_scan(f, r.grid, r.scan, r.sampler));
  }
  return detail::scan_outcome("verify", r, reports);
}

inline detail::Outcome cmd_mollify(const Resolved& r) {
  std::vector<InequalityReport> reports;
  json young = json::array();
  const std::size_t n = r.grid.dimension();
  for (const auto& f : r.fields) {
    const auto ladder = CoefficientLadder::mean_maximal(f, r.grid, r.scan, r.config.m);
    for (double eps : r.config.eps) {
      const Mollifier phi = Mollifier::bump(eps, n);
      const auto reach = DiscreteKernel::build(phi, r.grid).reach;
      const std::size_t pad = *std::max_element(reach.begin(), reach.end()) + 1;
      for (std::size_t level = 0; level < ladder.size(); ++level) {
        const SampledField padded = zero_pad(ladder.field(level), pad);
        const auto checks = young_check(padded, phi, r.config.p, r.scan.workers);
        for (std::size_t k = 0; k < checks.size(); ++k)
          young.push_back({{"field", f.name()},
                           {"eps", eps},
                           {"delta", ladder.delta(level)},
                           {"p", exponent_json(r.config.p[k])},
                           {"lhs", checks[k].lhs},
                           {"rhs", checks[k].rhs},
                           {"pass", checks[k].pass}});
      }
      reports.push_back(mollified_scan(f, r.config.m, phi, r.grid, r.scan, r.sampler, ladder));
    }
  }
  return detail::scan_outcome("mollify", r, reports, {{"young", young}});
}

inline detail::Outcome cmd_triebel(const Resolved& r) {
  std::vector<InequalityReport> reports;
  const int m = r.config.m;
  for (const auto& f : r.fields) {
    NodeDiscardReport nd = node_discard_check(f, m, r.grid, r.scan, r.sampler);
    reports.push_back(std::move(nd.main));
    reports.push_back(std::move(nd.triebel));
    if (r.config.g) {
      const SampledField g(r.grid, std::vector<double>(r.grid.size(), *r.config.g));
      const double max_step = std::min(1.0, r.config.delta.back() / m);
      const auto steps = sample_steps({r.grid.box(), r.config.pairs, r.config.seed, 0.0, max_step});
      InequalityReport t = triebel_scan(f, m, *r.config.s, g, steps, r.config.slack, r.scan.workers);
      t.params["field"] = f.name();
      t.params["g"] = *r.config.g;
      reports.push_back(std::move(t));
    }
  }
  return detail::scan_outcome("triebel", r, reports);
}

/// Parses argv, runs the command, and writes the result to `out` (or the
/// --out file). Diagnostics go to `err`. Returns the exit code.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Numerical checks of finite-difference identities and pointwise Sobolev inequalities"};
  app.require_subcommand(1);

  RunConfig flags;
  std::string config_path, p_text;
  std::vector<std::string> fields, p_list;
  bool dump = false;
  std::vector<int> corrupt;

  std::vector<CLI::Option*> opts;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"identities", "Randomized exact-identity suite"},
      {"verify", "Main inequality scan (and the first-order scan when m = 1)"},
      {"geometry", "Ball and lens volumes and C(n) for n = 1..5"},
      {"mollify", "Young checks and mollified scans over the eps ladder"},
      {"triebel", "Node-discarding check, plus an all-node scan with constant g when --g is set"}};

  std::map<std::string, CLI::App*> subs;
  std::map<std::string, std::map<std::string, CLI::Option*>> given;
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    auto& o = given[name];
    o["field"] = sub->add_option("--field", fields, "Field spec, repeatable (poly:, gauss:, pow:, sin:)");
    o["grid"] = sub->add_option("--grid", flags.grid, "Grid lo:hi:points per axis; N* repeats an axis");
    o["m"] = sub->add_option("--m", flags.m, "Difference order");
    o["s"] = sub->add_option("--s", flags.s, "Smoothness exponent, 0 < s <= m");
    o["p"] = sub->add_option("--p", p_list, "Lebesgue exponent(s), 'inf' allowed");
    o["delta"] = sub->add_option("--delta", flags.delta, "Delta ladder (increasing)")->delimiter(',');
    o["eps"] = sub->add_option("--eps", flags.eps, "Mollifier eps ladder")->delimiter(',');
    o["pairs"] = sub->add_option("--pairs", flags.pairs, "Number of pairs");
    o["seed"] = sub->add_option("--seed", flags.seed, "Sampler seed");
    o["min_sep"] = sub->add_option("--min-sep", flags.min_sep, "Minimum pair separation");
    o["max_sep"] = sub->add_option("--max-sep", flags.max_sep, "Maximum pair separation");
    o["slack"] = sub->add_option("--slack", flags.slack, "Violation slack: ratio > 1 + slack fails");
    o["domain"] = sub->add_option("--domain", flags.domain, "box | box:lo:hi,... | hole:lo:hi,...");
    o["interpolation"] = sub->add_option("--interpolation", flags.interpolation, "multilinear | nearest");
    o["out"] = sub->add_option("--out", flags.out, "Output file (default stdout)");
    o["format"] = sub->add_option("--format", flags.format, "json | csv");
    o["workers"] = sub->add_option("--workers", flags.workers, "Worker threads");
    o["draws"] = sub->add_option("--draws", flags.draws, "Draws per identity");
    o["g"] = sub->add_option("--g", flags.g, "triebel: constant g for an all-node scan");
    sub->add_option("--config", config_path, "JSON config file with the same keys");
    sub->add_flag("--dump-config", dump, "Print the resolved config and exit");
    sub->add_option("--corrupt-binomial", corrupt, "")->expected(2)->group("");
    subs[name] = sub;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  std::string command;
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) command = name;
  const auto& o = given[command];

  RunConfig cfg;
  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw parse_error("cannot read config file '" + config_path + "'");
      json j;
      try {
        j = json::parse(in);
      } catch (const json::exception& e) {
        throw parse_error("config file: " + std::string(e.what()));
      }
      cfg.merge(j);
    }
    auto set = [&](const char* key) { return o.at(key)->count() > 0; };
    if (set("field")) cfg.fields = fields;
    if (set("grid")) cfg.grid = flags.grid;
    if (set("m")) cfg.m = flags.m;
    if (set("s")) cfg.s = flags.s;
    if (set("p")) {
      cfg.p.clear();
      for (const auto& t : p_list)
        for (const auto& piece : detail::split(t, ',')) cfg.p.push_back(parse_exponent(piece));
    }
    if (set("delta")) cfg.delta = flags.delta;
    if (set("eps")) cfg.eps = flags.eps;
    if (set("pairs")) cfg.pairs = flags.pairs;
    if (set("seed")) cfg.seed = flags.seed;
    if (set("min_sep")) cfg.min_sep = flags.min_sep;
    if (set("max_sep")) cfg.max_sep = flags.max_sep;
    if (set("slack")) cfg.slack = flags.slack;
    if (set("domain")) cfg.domain = flags.domain;
    if (set("interpolation")) cfg.interpolation = flags.interpolation;
    if (set("out")) cfg.out = flags.out;
    if (set("format")) cfg.format = flags.format;
    if (set("workers")) cfg.workers = flags.workers;
    if (set("draws")) cfg.draws = flags.draws;
    if (set("g")) cfg.g = flags.g;
    cfg.command = command;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  struct Restore {
    ~Restore() { testing_hooks::restore_binomial(); }
  } restore;
  if (!corrupt.empty()) testing_hooks::corrupt_binomial(corrupt[0], corrupt[1], 1);

  try {
    const Resolved r = resolve(cfg);
    if (dump) {
      json j = r.config.to_json();
      j.erase("out");
      out << j.dump(2) << '\n';
      return kPass;
    }
    detail::Outcome res;
    if (command == "identities") res = cmd_identities(r);
    else if (command == "verify") res = cmd_verify(r);
    else if (command == "geometry") res = cmd_geometry(r);
    else if (command == "mollify") res = cmd_mollify(r);
    else res = cmd_triebel(r);

    const std::string text = r.config.format == "csv" ? res.csv : res.document.dump(2) + "\n";
    if (r.config.out.empty()) {
      out << text;
    } else {
      std::ofstream file(r.config.out, std::ios::binary);
      if (!file) {
        err << "error: cannot write '" << r.config.out << "'\n";
        return kInfeasible;
      }
      file << text;
    }
    if (res.code != kPass) err << command << ": FAILED\n";
    return res.code;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const argument_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasible;
  }
}

}  // namespace lagsob::cli

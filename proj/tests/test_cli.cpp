#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lagsob/cli.hpp"

using nlohmann::json;
namespace cli = lagsob::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "lagsob");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("lagsob_cli_" + name)).string();
}

void write_file(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

const std::vector<std::string> kSmall1d{"--grid", "-1:1:201", "--pairs", "300"};

// Subcommand and its arguments first, then the shared base options.
std::vector<std::string> with(const std::vector<std::string>& base, std::vector<std::string> command) {
  command.insert(command.end(), base.begin(), base.end());
  return command;
}

}  // namespace

TEST(CliParsers, Grid) {
  const auto g = cli::parse_grid("2*-1:1:11");
  EXPECT_EQ(g.dimension(), 2u);
  EXPECT_EQ(g.points(1), 11u);
  EXPECT_EQ(cli::parse_grid("0:1:3,-2:2:5").lo(1), -2.0);
  EXPECT_THROW(cli::parse_grid("0:1"), lagsob::parse_error);
  EXPECT_THROW(cli::parse_grid("0:x:3"), lagsob::parse_error);
  EXPECT_THROW(cli::parse_grid("0:1:2.5"), lagsob::parse_error);
}

TEST(CliParsers, Exponent) {
  EXPECT_EQ(cli::parse_exponent("2"), 2.0);
  EXPECT_TRUE(std::isinf(cli::parse_exponent("inf")));
  EXPECT_EQ(cli::exponent_json(HUGE_VAL), "inf");
  EXPECT_THROW(cli::parse_exponent("0.5"), lagsob::error);
  EXPECT_THROW(cli::parse_exponent("abc"), lagsob::parse_error);
}

TEST(Cli, GeometryTable) {
  const auto r = run({"geometry"});
  ASSERT_EQ(r.code, cli::kPass) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["command"], "geometry");
  ASSERT_EQ(j["rows"].size(), 5u);
  EXPECT_EQ(j["rows"][0]["C"].get<double>(), 2.0);
  EXPECT_NEAR(j["rows"][1]["C"].get<double>(), 2.5575, 1e-4);
  EXPECT_NEAR(j["rows"][2]["C"].get<double>(), 3.2, 1e-12);
}

TEST(Cli, IdentitiesPassAndCorruptedBinomialFails) {
  const auto ok = run({"identities", "--draws", "100"});
  ASSERT_EQ(ok.code, cli::kPass) << ok.err;
  EXPECT_TRUE(json::parse(ok.out)["pass"].get<bool>());
  const auto bad = run({"identities", "--draws", "100", "--corrupt-binomial", "3", "1"});
  EXPECT_EQ(bad.code, cli::kFailure);
  EXPECT_FALSE(json::parse(bad.out)["pass"].get<bool>());
  // The hook is scoped to one run.
  EXPECT_EQ(run({"identities", "--draws", "20"}).code, cli::kPass);
}

TEST(Cli, IdentitiesDegreeZeroCorpusHasZeroResiduals) {
  const auto r = run({"identities", "--draws", "100", "--field", "poly:3", "--field", "poly:-1/2"});
  ASSERT_EQ(r.code, cli::kPass) << r.err;
  const auto doc = json::parse(r.out);
  for (const auto& id : doc["identities"]) EXPECT_EQ(id["max_residual"].get<double>(), 0.0) << id;
}

TEST(Cli, VerifyCubeSecondOrder) {
  const auto r = run(with(kSmall1d, {"verify", "--field", "poly:x0^3", "--m", "2"}));
  ASSERT_EQ(r.code, cli::kPass) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  ASSERT_EQ(j["reports"].size(), 1u);
  EXPECT_EQ(j["reports"][0]["n_pairs"], 300);
  EXPECT_EQ(j["config"]["m"], 2);
}

TEST(Cli, VerifyFirstOrderAddsLemma1Report) {
  const auto r = run(with(kSmall1d, {"verify", "--field", "sin:w=2"}));
  ASSERT_EQ(r.code, cli::kPass) << r.err;
  const auto reports = json::parse(r.out)["reports"];
  ASSERT_EQ(reports.size(), 2u);
  EXPECT_EQ(reports[0]["max_ratio"], reports[1]["max_ratio"]);
}

TEST(Cli, HoleDomainReportsRejections) {
  const auto r = run({"verify", "--grid", "2*-1:1:61", "--pairs", "200", "--field", "poly:x0*x1", "--domain",
                      "hole:-0.3:0.3,-0.3:0.3"});
  ASSERT_EQ(r.code, cli::kPass) << r.err;
  EXPECT_GT(json::parse(r.out)["reports"][0]["n_rejected"].get<int>(), 0);
}

TEST(Cli, Determinism) {
  const auto args = with(kSmall1d, {"verify", "--field", "gauss:a=1", "--seed", "7"});
  const auto a = run(args), b = run(args), c = run(with({"--workers", "3"}, args));
  ASSERT_EQ(a.code, cli::kPass);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  EXPECT_NE(a.out, run(with(kSmall1d, {"verify", "--field", "gauss:a=1", "--seed", "8"})).out);
}

TEST(Cli, TriebelZeroCoefficientFails) {
  const auto ok = run(with(kSmall1d, {"triebel", "--field", "sin:w=3", "--m", "2"}));
  EXPECT_EQ(ok.code, cli::kPass) << ok.err;
  const auto bad = run(with(kSmall1d, {"triebel", "--field", "sin:w=3", "--m", "2", "--g", "0"}));
  EXPECT_EQ(bad.code, cli::kFailure);
  bool found = false;
  const auto doc = json::parse(bad.out);
  for (const auto& rep : doc["reports"])
    if (rep["name"] == "triebel") {
      found = true;
      EXPECT_GT(rep["n_violations"].get<int>(), 0);
    }
  EXPECT_TRUE(found);
}

TEST(Cli, MollifyDefaultsAndInfiniteExponent) {
  const auto r = run(with(kSmall1d, {"mollify", "--field", "gauss:a=2"}));
  ASSERT_EQ(r.code, cli::kPass) << r.err;
  const auto j = json::parse(r.out);
  bool has_inf = false;
  for (const auto& y : j["young"]) {
    EXPECT_TRUE(y["pass"].get<bool>());
    has_inf = has_inf || y["p"] == "inf";
  }
  EXPECT_TRUE(has_inf);
  EXPECT_FALSE(j["reports"].empty());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"verify", "--bogus"}).code, cli::kUsage);
  EXPECT_EQ(run({"verify", "--field", "poly:x0^"}).code, cli::kUsage);
  EXPECT_EQ(run({"verify", "--field", "nope:1"}).code, cli::kUsage);
  EXPECT_EQ(run({"verify", "--grid", "1:0:5"}).code, cli::kUsage);
  EXPECT_EQ(run({"verify", "--m", "0"}).code, cli::kUsage);
  EXPECT_EQ(run({"verify", "--format", "xml"}).code, cli::kUsage);
  // Kernel wider than the box.
  EXPECT_EQ(run(with(kSmall1d, {"mollify", "--eps", "3"})).code, cli::kInfeasible);
  // Sampling region disjoint from the admissible pairs.
  EXPECT_EQ(run(with(kSmall1d, {"verify", "--field", "poly:x0", "--domain", "box:0.99:1"})).code, cli::kInfeasible);
}

TEST(Cli, ConfigFilePrecedenceAndDumpRoundTrip) {
  const auto path = temp_path("cfg.json");
  write_file(path, R"({"pairs": 300, "seed": 5, "m": 2, "grid": "-1:1:101"})");
  const auto dumped = run({"verify", "--config", path, "--seed", "9", "--dump-config"});
  ASSERT_EQ(dumped.code, cli::kPass) << dumped.err;
  const auto j = json::parse(dumped.out);
  EXPECT_EQ(j["pairs"], 300);
  EXPECT_EQ(j["seed"], 9);
  EXPECT_EQ(j["m"], 2);
  EXPECT_EQ(j["grid"], "-1:1:101");
  EXPECT_EQ(j["slack"], 0.05);

  const auto again_path = temp_path("dumped.json");
  write_file(again_path, dumped.out);
  const auto again = run({"verify", "--config", again_path, "--dump-config"});
  ASSERT_EQ(again.code, cli::kPass) << again.err;
  EXPECT_EQ(json::parse(again.out), j);

  write_file(path, R"({"pairs": 300, "colour": "red"})");
  EXPECT_EQ(run({"verify", "--config", path}).code, cli::kUsage);
  write_file(path, R"({"pairs": )");
  EXPECT_EQ(run({"verify", "--config", path}).code, cli::kUsage);
  EXPECT_EQ(run({"verify", "--config", temp_path("missing.json")}).code, cli::kUsage);
  std::remove(path.c_str());
  std::remove(again_path.c_str());
}

TEST(Cli, CsvAndOutFile) {
  const auto path = temp_path("out.csv");
  const auto r = run(with(kSmall1d, {"verify", "--field", "poly:x0^2", "--format", "csv", "--out", path}));
  ASSERT_EQ(r.code, cli::kPass) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header.rfind("report,index,x0,y0,lhs,rhs,ratio", 0), 0u) << header;
  std::size_t rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  EXPECT_EQ(rows, 600u);
  std::remove(path.c_str());
}

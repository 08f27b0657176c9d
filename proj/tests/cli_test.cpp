#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "spextree/cli.hpp"
#include "spextree/error.hpp"

using namespace spextree;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

auto run(std::vector<std::string> args) -> Run {
  args.insert(args.begin(), "spex-tree");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

auto scratch() -> fs::path {
  auto dir = fs::temp_directory_path() / "spex_tree_cli_test";
  fs::create_directories(dir);
  return dir;
}

auto write(const std::string& name, const std::string& text) -> std::string {
  auto path = scratch() / name;
  std::ofstream(path) << text;
  return path.string();
}

auto p7() -> std::string { return write("p7.el", "# P7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n"); }

auto shell(const std::string& cmd) -> std::string {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buf{};
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  pclose(pipe);
  return out;
}

}  // namespace

TEST(Cli, AnalyzePath) {
  auto r = run({"analyze", "--tree", p7()});
  ASSERT_EQ(r.code, 0);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["m"], 7);
  EXPECT_EQ(j["l"], 2);
  EXPECT_EQ(j["delta"], 2);
  EXPECT_EQ(j["t"], 0);
}

TEST(Cli, DecomposeAndHypothesis) {
  auto d = Json::parse(run({"decompose", "--tree", p7()}).out);
  EXPECT_EQ(d["Jprime"], Json::parse("[3]"));
  EXPECT_EQ(d["Ai"]["3"], Json::parse("[1,5]"));
  EXPECT_EQ(d["greedy_fallback"], false);

  auto h = Json::parse(run({"hypothesis", "--tree", p7()}).out);
  EXPECT_EQ(h["status"], "Found");
  EXPECT_EQ(h["certificate"]["witness"], Json::parse("[3]"));
  EXPECT_EQ(h["certificate"]["lhs"], 2);
  EXPECT_EQ(h["certificate"]["rhs"], 1);

  auto bad = run({"hypothesis", "--tree", p7(), "--witness", "1"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(Json::parse(bad.out)["error"]["code"], "NotSubsetOfJprime");
}

TEST(Cli, BoundsExamples) {
  auto e = Json::parse(run({"bounds", "--tree", p7(), "--n", "100", "--embeddable"}).out);
  EXPECT_NEAR(e["lower"].get<double>(), 14.508925, 1e-6);
  EXPECT_NEAR(e["upper"].get<double>(), 14.748925, 1e-6);
  EXPECT_EQ(e["regime"], "embeddable");
  auto p = Json::parse(run({"bounds", "--tree", p7(), "--n", "100"}).out);
  EXPECT_EQ(p["upper"].get<double>(), 15.0);
  EXPECT_EQ(p["regime"], "plain");
}

TEST(Cli, EmbedStarAndFiles) {
  auto s = Json::parse(run({"embed", "--tree", p7(), "--host", "star"}).out);
  EXPECT_EQ(s["embedding"]["verified"], true);
  EXPECT_EQ(s["embedding"]["method"], "constructive_star_host");
  EXPECT_EQ(s["embedding"]["map"].size(), 7U);
  EXPECT_EQ(s["n"], 16);

  auto k2 = write("k2.g", "# graph n=2\n0 1\n");
  auto empty = write("e10.g", "# graph n=10\n");
  auto j = run({"embed", "--tree", p7(), "--host", "join", k2, empty});
  ASSERT_EQ(j.code, 0) << j.out;
  auto jj = Json::parse(j.out);
  EXPECT_EQ(jj["nonembedding"]["certified"], true);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"analyze"}).code, 2);
  EXPECT_EQ(run({"analyze", "--tree", p7(), "--bogus"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  auto cyc = write("cycle.el", "0 1\n1 2\n2 0\n");
  auto r = run({"analyze", "--tree", cyc});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(Json::parse(r.out)["error"]["code"], "NotATree");
  auto missing = run({"analyze", "--tree", (scratch() / "nope.el").string()});
  EXPECT_EQ(missing.code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ConstructKinds) {
  auto c = Json::parse(run({"construct", "--kind", "canonical", "--m", "9", "--l", "2", "--delta", "2"}).out);
  EXPECT_EQ(c["profile"]["t"], 2);
  auto lob = Json::parse(run({"construct", "--kind", "lobster", "--spine", "2,2,2,2", "--pendants", "1"}).out);
  EXPECT_EQ(lob["profile"]["l"], 5);
  auto comb = Json::parse(run({"construct", "--kind", "combine", "--tree", p7(), "--tree2", p7()}).out);
  EXPECT_EQ(comb["profile"]["m"], 14);
  auto a = run({"construct", "--kind", "random", "--l", "4", "--delta", "3", "--t", "2", "--seed", "5"});
  auto b = run({"construct", "--kind", "random", "--l", "4", "--delta", "3", "--t", "2", "--seed", "5"});
  EXPECT_EQ(a.out, b.out);
  auto bad = run({"construct", "--kind", "embeddable", "--m", "5", "--l", "0", "--delta", "4"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(Json::parse(bad.out)["error"]["code"], "UnsupportedParameters");

  auto edges = (scratch() / "built.el").string();
  ASSERT_EQ(run({"construct", "--kind", "canonical", "--m", "9", "--l", "2", "--delta", "2", "--edges", edges}).code, 0);
  EXPECT_EQ(run({"analyze", "--tree", edges}).code, 0);
}

TEST(Cli, OracleOnPath) {
  auto p4 = write("p4.el", "0 1\n1 2\n2 3\n");
  auto r = Json::parse(run({"oracle", "--tree", p4, "--n", "5"}).out);
  EXPECT_EQ(r["lambda_max"], 2);
  auto big = run({"oracle", "--tree", p4, "--n", "9"});
  EXPECT_EQ(big.code, 1);
  EXPECT_EQ(Json::parse(big.out)["error"]["code"], "TooLarge");
}

TEST(Cli, OutFileMatchesStdout) {
  auto path = (scratch() / "out.json").string();
  auto direct = run({"analyze", "--tree", p7()});
  ASSERT_EQ(run({"analyze", "--tree", p7(), "--out", path}).code, 0);
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  EXPECT_EQ(buf.str(), direct.out);
}

TEST(Config, Parsing) {
  auto c = parse_config("# comment\ncampaign = gap\n  l = 1..2 \n\nn=100,1000\n");
  EXPECT_EQ(c.at("campaign"), "gap");
  EXPECT_EQ(c.at("l"), "1..2");
  EXPECT_EQ(c.at("n"), "100,1000");
  EXPECT_THROW(parse_config("novalue\n"), Error);
  EXPECT_THROW(parse_config("a = 1\na = 2\n"), Error);
}

TEST(Sweep, EmbeddingCampaign) {
  auto r = run_sweep(parse_config("campaign = embedding\nm_max = 12\n"));
  EXPECT_EQ(r["summary"]["trees"], 987);
  EXPECT_EQ(r["summary"]["t_lt_l"], 65);
  EXPECT_EQ(r["summary"]["embedded"], 65);
  EXPECT_EQ(r["summary"]["failures"], 0);
}

TEST(Sweep, FConsistencyAndEmptyGrid) {
  auto r = run_sweep(parse_config("campaign = f_consistency\n"));
  EXPECT_LT(r["summary"]["max_error"].get<double>(), 1e-8);
  auto empty = run_sweep(parse_config("campaign = gap\nl =\n"));
  EXPECT_TRUE(empty["rows"].empty());
  auto cfg = write("empty.cfg", "campaign = gap\nl =\n");
  EXPECT_EQ(run({"sweep", "--config", cfg}).code, 0);
}

TEST(Sweep, ConfigErrors) {
  auto cfg = write("bad.cfg", "campaign = nonsense\n");
  auto r = run({"sweep", "--config", cfg});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(Json::parse(r.out)["error"]["code"], "ConfigError");
  EXPECT_THROW(run_sweep(parse_config("campaign = gap\nbogus = 1\n")), Error);
  EXPECT_THROW(run_sweep(parse_config("campaign = gap\nl = x\n")), Error);
}

TEST(Sweep, CsvHasHeaderAndRows) {
  auto cfg = write("gap.cfg", "campaign = gap\nl = 1..2\ndelta = 2\nn = 100\n");
  auto r = run({"sweep", "--config", cfg, "--csv"});
  ASSERT_EQ(r.code, 0);
  std::stringstream in(r.out);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, 3);
}

// Separate processes must print identical bytes.
TEST(Binary, Deterministic) {
  auto cfg = write("hd.cfg", "campaign = highdeg\npairs = 50\nseed = 4\n");
  std::string cmd = std::string(SPEX_TREE_BIN) + " sweep --config " + cfg;
  auto a = shell(cmd);
  auto b = shell(cmd);
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, b);
  std::string embed = std::string(SPEX_TREE_BIN) + " embed --tree " + p7() + " --host star";
  EXPECT_EQ(shell(embed), shell(embed));
}

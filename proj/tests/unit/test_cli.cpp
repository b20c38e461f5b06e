#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bispan/errors.hpp"
#include "bispan/extremal.hpp"
#include "bispan/graph_io.hpp"
#include "bispan/report_json.hpp"
#include "cli.hpp"

using namespace bispan;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "bispan");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("bispan_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }
  std::string write_graph_to(const std::string& name, const BipartiteGraph& g) {
    const auto path = dir_ / name;
    write_graph_file(path, g);
    return path.string();
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, SpectralOnK33) {
  const auto path = write_graph_to("k33.bip", complete_bipartite(3, 3));
  const auto r = invoke({"spectral", path});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["schema"], "1");
  EXPECT_NEAR(doc["q"].get<double>(), 6.0, 1e-9);
  EXPECT_EQ(doc["method"], "power_iteration");

  const auto text = invoke({"spectral", path, "--format", "text"});
  EXPECT_EQ(text.code, 0);
  EXPECT_EQ(text.out.rfind("q(G) = 6", 0), 0u) << text.out;
}

TEST_F(CliTest, CheckTreeOnExtremalStar) {
  const auto path = write_graph_to("gstar.bip", build_extremal_star(3, 3, 7));
  const auto r = invoke({"check-tree", path, "--k", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = Json::parse(r.out);
  EXPECT_FALSE(doc["feasible"].get<bool>());
  EXPECT_EQ(doc["violating_set"], Json::array({0}));
}

TEST_F(CliTest, CheckTreeWithDemandFile) {
  const auto g = complete_bipartite(3, 7);
  const auto path = write_graph_to("k37.bip", g);
  const auto demand = write("f.txt", "3\n3\n3\n");
  const auto r = invoke({"check-tree", path, "--f", demand});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = Json::parse(r.out);
  ASSERT_TRUE(doc["feasible"].get<bool>());
  std::vector<Edge> edges;
  for (const auto& e : doc["tree"]) edges.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>()});
  EXPECT_TRUE(verify_certificate(g, DegreeDemand::uniform(3, 3), {edges}));

  const auto short_demand = write("short.txt", "3\n3\n");
  EXPECT_EQ(invoke({"check-tree", path, "--f", short_demand}).code, 2);
}

TEST_F(CliTest, CheckTreeOptionsAreExclusive) {
  const auto path = write_graph_to("g.bip", complete_bipartite(2, 3));
  const auto demand = write("f.txt", "2\n2\n");
  EXPECT_EQ(invoke({"check-tree", path, "--k", "2", "--f", demand}).code, 2);
  const auto none = invoke({"check-tree", path});
  EXPECT_EQ(none.code, 2);
  EXPECT_NE(none.err.find("--k or --f"), std::string::npos);
}

TEST_F(CliTest, MalformedFilesGiveLineNumbers) {
  const auto bad = write("bad.bip", "p bip 2 2\ne 0 0\ne 0 7\n");
  const auto r = invoke({"spectral", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;

  const auto path = write_graph_to("g.bip", complete_bipartite(2, 3));
  const auto bad_demand = write("f.txt", "2\nabc\n");
  const auto d = invoke({"check-tree", path, "--f", bad_demand});
  EXPECT_EQ(d.code, 2);
  EXPECT_NE(d.err.find("line 2"), std::string::npos) << d.err;

  EXPECT_EQ(invoke({"spectral", (dir_ / "missing.bip").string()}).code, 2);
}

TEST_F(CliTest, ExtremalOutputIsAGraphFile) {
  const auto r = invoke({"extremal", "--k", "3", "--m", "3", "--n", "7", "--s", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  EXPECT_EQ(read_graph(in), build_extremal({3, 3, 7, 2}));
  EXPECT_NE(r.out.find("# phi(x) = x^4 - 15x^3 + 60x^2 - 40x"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);

  const auto graph_out = (dir_ / "g1.bip").string();
  const auto to_file = invoke({"extremal", "--k", "3", "--m", "3", "--n", "7", "--graph-out", graph_out});
  ASSERT_EQ(to_file.code, 0);
  EXPECT_EQ(read_graph_file(graph_out), build_extremal_star(3, 3, 7));
  EXPECT_EQ(to_file.out.rfind("extremal family", 0), 0u);
}

TEST_F(CliTest, ExtremalRejectsOutOfRange) {
  EXPECT_EQ(invoke({"extremal", "--k", "3", "--m", "3", "--n", "7", "--s", "3"}).code, 2);
  EXPECT_EQ(invoke({"extremal", "--k", "3", "--m", "3", "--n", "6"}).code, 2);
}

TEST_F(CliTest, ProofSweepRanges) {
  const auto r = invoke({"proof-sweep", "--k-range", "3..4", "--m-range", "3..3", "--n-extra", "0..2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["schema"], "1");
  EXPECT_TRUE(doc["ok"].get<bool>());
  EXPECT_FALSE(r.err.empty());

  EXPECT_EQ(invoke({"proof-sweep", "--k-range", "5..3"}).code, 2);
  EXPECT_EQ(invoke({"proof-sweep", "--k-range", "x"}).code, 2);
}

TEST_F(CliTest, MonotonicityFuzzTextFormat) {
  const auto r = invoke({"monotonicity-fuzz", "--trials", "50", "--seed", "3", "--format", "text"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("PASS"), std::string::npos) << r.out;
  EXPECT_TRUE(r.err.empty());
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"verify-theorem", "--k", "3", "--m", "3", "--n", "6"}).code, 2);
  EXPECT_EQ(invoke({"verify-theorem", "--k", "3", "--m", "4", "--n", "9"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(ParseRange, Forms) {
  EXPECT_EQ(cli::parse_range("3..5"), (std::pair<std::int64_t, std::int64_t>{3, 5}));
  EXPECT_EQ(cli::parse_range("4"), (std::pair<std::int64_t, std::int64_t>{4, 4}));
  EXPECT_THROW(cli::parse_range("3.."), InputError);
  EXPECT_THROW(cli::parse_range("a..b"), InputError);
  EXPECT_THROW(cli::parse_range("6..5"), InputError);
}

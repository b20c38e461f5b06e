#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bispan/report_json.hpp"
#include "bispan/verify.hpp"
#include "oracles.hpp"

using namespace bispan;

// Set BISPAN_UPDATE_GOLDEN=1 to rewrite the files instead of comparing.

namespace {

void expect_golden(const std::string& name, const std::string& actual) {
  const auto path = std::filesystem::path(BISPAN_GOLDEN_DIR) / name;
  if (std::getenv("BISPAN_UPDATE_GOLDEN")) {
    std::ofstream(path) << actual;
    return;
  }
  std::ifstream in(path);
  ASSERT_TRUE(in) << "missing golden file " << path;
  std::stringstream expected;
  expected << in.rdbuf();
  EXPECT_EQ(actual, expected.str()) << "golden mismatch: " << name;
}

}  // namespace

TEST(Golden, EnumerationCounts) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  for (const auto& [m, n] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 3}, {3, 4}}) {
    std::uint64_t connected = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m * n)); ++mask)
      connected += oracle::connected(m, n, mask);
    EXPECT_EQ(count_bipartite(m, n, true), connected);
    doc[std::to_string(m) + "x" + std::to_string(n)] = {{"all", count_bipartite(m, n, false)},
                                                         {"connected", connected}};
  }
  expect_golden("enumeration_counts.json", dump_json(doc));
}

TEST(Golden, TheoremReportAtFlagshipPoint) {
  const auto sequential = dump_json(theorem_report_json(theorem_check(3, 3, 7, {1e-7, 1})));
  const auto parallel = dump_json(theorem_report_json(theorem_check(3, 3, 7, {1e-7, 4})));
  EXPECT_EQ(sequential, parallel);
  expect_golden("verify_theorem_k3_m3_n7.json", sequential);
}

TEST(Golden, ProofSweepDefaultGrid) {
  expect_golden("proof_sweep_default.json", dump_json(sweep_report_json(proof_sweep())));
}

TEST(Golden, MonotonicityFuzz) {
  expect_golden("monotonicity_fuzz_1000_seed1.json", dump_json(monotonicity_report_json(monotonicity_fuzz(1000, 1))));
}

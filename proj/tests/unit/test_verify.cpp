#include <gtest/gtest.h>

#include <random>
#include <set>

#include "bispan/errors.hpp"
#include "bispan/extremal.hpp"
#include "bispan/report_json.hpp"
#include "bispan/spectral.hpp"
#include "bispan/verify.hpp"
#include "oracles.hpp"

using namespace bispan;

TEST(Enumeration, TwoByTwo) {
  EXPECT_EQ(count_bipartite(2, 2, false), 16u);
  std::uint64_t connected = 0;
  for (std::uint64_t mask = 0; mask < 16; ++mask) connected += oracle::connected(2, 2, mask);
  EXPECT_EQ(connected, 5u);
  EXPECT_EQ(count_bipartite(2, 2, true), connected);
  EXPECT_EQ(BipartiteEnumerator::universe_size(3, 7), 2097152u);
}

TEST(Enumeration, ConnectivityMatchesOracle) {
  for (std::uint64_t mask = 0; mask < (1u << 12); ++mask)
    ASSERT_EQ(mask_connected(3, 4, mask), oracle::connected(3, 4, mask)) << mask;
  for (std::uint64_t mask = 0; mask < (1u << 12); ++mask)
    ASSERT_EQ(mask_connected(4, 3, mask), oracle::connected(4, 3, mask)) << mask;
}

TEST(Enumeration, YieldsEachGraphOnceInMaskOrder) {
  BipartiteEnumerator it(2, 3, false);
  std::set<std::uint64_t> seen;
  std::uint64_t previous = 0;
  bool first = true;
  while (auto g = it.next()) {
    EXPECT_EQ(mask_of(*g), it.mask());
    EXPECT_EQ(graph_from_mask(2, 3, it.mask()), *g);
    if (!first) {
      EXPECT_GT(it.mask(), previous);
    }
    previous = it.mask();
    first = false;
    seen.insert(it.mask());
  }
  EXPECT_EQ(seen.size(), 64u);
}

TEST(Enumeration, SubRangesPartitionTheSpace) {
  std::uint64_t total = 0;
  for (std::uint64_t start = 0; start < 4096; start += 1000) {
    BipartiteEnumerator it(3, 4, true, start, std::min<std::uint64_t>(start + 1000, 4096));
    while (it.next()) ++total;
  }
  EXPECT_EQ(total, count_bipartite(3, 4, true));
}

TEST(Enumeration, Caps) {
  EXPECT_THROW(BipartiteEnumerator(5, 5, false), CapacityError);
  EXPECT_THROW(theorem_check(3, 3, 9), CapacityError);
  EXPECT_THROW(theorem_check(3, 3, 6), InputError);
}

TEST(ProofSweep, DefaultGridIsClean) {
  const auto r = proof_sweep();
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.failures.empty());
  // 3 k values, m = 3, 4, 5 give 2 + 3 + 4 values of s, 5 values of n
  EXPECT_EQ(r.points.size(), 3u * (2 + 3 + 4) * 5);
  EXPECT_GT(r.checks_run, r.points.size() * 15);
}

TEST(ProofSweep, BoundaryPointIsExpected) {
  const auto r = proof_sweep({3, 4, 3, 4, 0, 0});
  EXPECT_TRUE(r.ok());
  ASSERT_FALSE(r.points.empty());
  for (const auto& pt : r.points) {
    EXPECT_TRUE(pt.boundary);
    ASSERT_EQ(pt.checks.size(), 1u);
    EXPECT_EQ(pt.checks[0].name, "f_boundary_zero");
    EXPECT_TRUE(pt.checks[0].passed);
  }
}

TEST(ProofSweep, SOneCollapsesToTheBound) {
  const auto r = proof_sweep({3, 3, 3, 3, 1, 1});
  for (const auto& pt : r.points) {
    if (pt.params.s != 1) {
      EXPECT_LT(pt.q1, pt.qstar - 1e-8);
      continue;
    }
    EXPECT_NEAR(pt.q1, pt.qstar, 1e-12);
    EXPECT_EQ(phi_coeffs(pt.params), phi_star_coeffs(3, 3, 7));
  }
}

TEST(ProofSweep, GridValidation) {
  EXPECT_THROW(proof_sweep({2, 3, 3, 3, 1, 1}), InputError);
  EXPECT_THROW(proof_sweep({3, 3, 2, 3, 1, 1}), InputError);
  EXPECT_THROW(proof_sweep({3, 3, 3, 3, -1, 1}), InputError);
  EXPECT_THROW(proof_sweep({4, 3, 3, 3, 1, 1}), InputError);
}

TEST(ProofSweep, Deterministic) {
  const SweepGrid grid{3, 4, 3, 4, 0, 2};
  EXPECT_EQ(dump_json(sweep_report_json(proof_sweep(grid))), dump_json(sweep_report_json(proof_sweep(grid))));
}

TEST(Monotonicity, IdenticalGraphGivesEquality) {
  std::mt19937_64 rng(4);
  const auto g = random_connected_bipartite(4, 5, 0.5, rng);
  EXPECT_NEAR(signless_spectral_radius(g).value, signless_spectral_radius(g).value, 1e-12);
}

TEST(Monotonicity, SpanningTreeOfK33) {
  const std::vector<Edge> tree{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 1}};
  const auto h = BipartiteGraph::from_edge_list(3, 3, tree);
  ASSERT_TRUE(is_connected(h));
  EXPECT_LT(signless_spectral_radius(h).value, 6.0);
  const auto exact = strictly_below_exact(signless_laplacian(h), signless_laplacian(complete_bipartite(3, 3)), 6.0);
  ASSERT_TRUE(exact);
  EXPECT_TRUE(*exact);
}

TEST(Monotonicity, ExactCheckRefusesEquality) {
  const auto g = complete_bipartite(2, 3);
  const auto exact = strictly_below_exact(signless_laplacian(g), signless_laplacian(g), 5.0);
  ASSERT_TRUE(exact);
  EXPECT_FALSE(*exact);
}

TEST(Monotonicity, SmallFuzzIsCleanAndDeterministic) {
  const auto a = monotonicity_fuzz(300, 17);
  const auto b = monotonicity_fuzz(300, 17);
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(a.violations, 0u);
  EXPECT_GT(a.strict_checked, 0u);
  EXPECT_EQ(dump_json(monotonicity_report_json(a)), dump_json(monotonicity_report_json(b)));
}

TEST(CheckerFuzz, SmallRunAgrees) {
  const auto r = checker_fuzz(300, 8);
  EXPECT_EQ(r.instances, 300u);
  EXPECT_TRUE(r.checkers_agree());
  EXPECT_TRUE(r.constructor_ok());
  EXPECT_GT(r.feasible, 0u);
  EXPECT_GT(r.infeasible, 0u);
}

TEST(ConstructorSweep, IndependentOfJobs) {
  const auto one = constructor_sweep(3, 4, 2, 1);
  const auto many = constructor_sweep(3, 4, 2, 3);
  EXPECT_TRUE(one.ok());
  EXPECT_EQ(one.graphs, count_bipartite(3, 4, true));
  EXPECT_EQ(one.graphs, many.graphs);
  EXPECT_EQ(one.feasible, many.feasible);
}

TEST(RandomGraphs, AreConnectedAndSized) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    const std::size_t m = 1 + rng() % 6;
    const std::size_t n = 1 + rng() % 8;
    const auto g = random_connected_bipartite(m, n, 0.2, rng);
    EXPECT_EQ(g.left_size(), m);
    EXPECT_EQ(g.right_size(), n);
    EXPECT_TRUE(is_connected(g));
  }
}

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "bispan/errors.hpp"
#include "bispan/extremal.hpp"
#include "bispan/spectral.hpp"
#include "bispan/verify.hpp"
#include "oracles.hpp"

using namespace bispan;

namespace {

std::vector<std::vector<double>> to_rows(const QuotientMatrix& qm) {
  std::vector<std::vector<double>> rows(qm.order(), std::vector<double>(qm.order()));
  for (std::size_t i = 0; i < qm.order(); ++i)
    for (std::size_t j = 0; j < qm.order(); ++j) rows[i][j] = qm.entry(i, j);
  return rows;
}

std::vector<std::vector<std::int64_t>> integer_rows(const QuotientMatrix& qm) {
  std::vector<std::vector<std::int64_t>> rows(qm.order(), std::vector<std::int64_t>(qm.order()));
  for (std::size_t i = 0; i < qm.order(); ++i)
    for (std::size_t j = 0; j < qm.order(); ++j) rows[i][j] = qm.integer_entry(i, j);
  return rows;
}

// Largest eigenvalue of a nonsymmetric quotient: it is similar to a
// symmetric matrix via the block sizes, D^(1/2) B D^(-1/2).
double quotient_radius(const QuotientMatrix& qm) {
  auto rows = to_rows(qm);
  const auto sizes = qm.block_sizes();
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j)
      rows[i][j] *= std::sqrt(static_cast<double>(sizes[i]) / static_cast<double>(sizes[j]));
  return oracle::largest_eigenvalue(rows);
}

}  // namespace

TEST(SignlessLaplacian, MatchesOracleEntries) {
  const auto g = build_extremal_star(3, 3, 7);
  const auto q = signless_laplacian(g);
  const auto ref = oracle::signless_laplacian(g);
  ASSERT_EQ(q.order(), ref.size());
  for (std::size_t i = 0; i < q.order(); ++i)
    for (std::size_t j = 0; j < q.order(); ++j) EXPECT_EQ(q(i, j), ref[i][j]);
}

TEST(SpectralRadius, CompleteBipartite) {
  for (std::size_t m = 1; m <= 6; ++m)
    for (std::size_t n = 1; n <= 6; ++n)
      EXPECT_NEAR(signless_spectral_radius(complete_bipartite(m, n)).value, double(m + n), 1e-9)
          << m << "," << n;
}

TEST(SpectralRadius, AgreesWithDenseOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + rng() % 7;
    const std::size_t n = 1 + rng() % 9;
    const auto g = random_connected_bipartite(m, n, 0.35, rng);
    const auto est = signless_spectral_radius(g);
    EXPECT_NEAR(est.value, oracle::q_dense(g), 1e-8);
    EXPECT_LE(est.residual, 1e-10 * std::max(1.0, est.value));
  }
}

TEST(SpectralRadius, DisconnectedAndEdgeless) {
  const std::vector<Edge> edges{{0, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}};
  const auto g = BipartiteGraph::from_edge_list(3, 3, edges);
  EXPECT_NEAR(signless_spectral_radius(g).value, oracle::q_dense(g), 1e-9);
  EXPECT_NEAR(signless_spectral_radius(g).value, 4.0, 1e-9);
  EXPECT_EQ(signless_spectral_radius(BipartiteGraph::edgeless(2, 3)).value, 0.0);
}

TEST(SpectralRadius, StarUpperBound) {
  // q(G) <= max over edges of d(u) + d(v)
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random_connected_bipartite(4, 6, 0.4, rng);
    std::size_t bound = 0;
    for (const auto& e : g.edges()) bound = std::max(bound, g.left_degree(e.a) + g.right_degree(e.b));
    EXPECT_LE(signless_spectral_radius(g).value, double(bound) + 1e-9);
  }
}

TEST(SpectralRadius, OscillatingPowerIterationFallsBack) {
  // adjacency of the path on 3 vertices: eigenvalues -sqrt2, 0, sqrt2, so
  // power iteration from the ones vector alternates and never settles
  SymMatrix adj(3);
  adj.set(0, 1, 1.0);
  adj.set(1, 2, 1.0);
  const auto est = spectral_radius(adj);
  EXPECT_EQ(est.method, EigenMethod::jacobi);
  EXPECT_NEAR(est.value, std::sqrt(2.0), 1e-12);
}

TEST(Jacobi, MatchesOracleSpectrum) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  SymMatrix mtx(9);
  std::vector<std::vector<double>> ref(9, std::vector<double>(9));
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = i; j < 9; ++j) {
      const double v = u(rng);
      mtx.set(i, j, v);
      ref[i][j] = ref[j][i] = v;
    }
  const auto eig = jacobi_eigenvalues(mtx);
  ASSERT_EQ(eig.size(), 9u);
  EXPECT_TRUE(std::is_sorted(eig.begin(), eig.end()));
  EXPECT_NEAR(eig.back(), oracle::largest_eigenvalue(ref), 1e-12);
}

TEST(SpectralRadius, OrderCaps) {
  EXPECT_THROW(jacobi_eigenvalues(SymMatrix(kJacobiOrderCap + 1)), CapacityError);
  EXPECT_THROW(spectral_radius(SymMatrix(kDenseOrderCap + 1)), CapacityError);
}

TEST(QuotientMatrix, ExtremalStar) {
  const ExtremalParams p{3, 3, 7, 1};
  const auto qm = quotient_matrix(build_extremal(p), extremal_partition(p));
  EXPECT_TRUE(qm.equitable());
  EXPECT_TRUE(qm.integral());
  const std::vector<std::vector<std::int64_t>> expected{
      {2, 0, 2, 0}, {0, 7, 2, 5}, {1, 2, 3, 0}, {0, 2, 0, 2}};
  EXPECT_EQ(integer_rows(qm), expected);
}

TEST(QuotientMatrix, FamilyAtSTwo) {
  const ExtremalParams p{3, 3, 7, 2};
  const auto qm = quotient_matrix(build_extremal(p), extremal_partition(p));
  EXPECT_TRUE(qm.equitable());
  const std::vector<std::vector<std::int64_t>> expected{
      {4, 0, 4, 0}, {0, 7, 4, 3}, {2, 1, 3, 0}, {0, 1, 0, 1}};
  EXPECT_EQ(integer_rows(qm), expected);
}

TEST(QuotientMatrix, EquitableSharesLargestEigenvalue) {
  for (std::int64_t k = 3; k <= 5; ++k)
    for (std::int64_t m = 3; m <= 5; ++m)
      for (std::int64_t s = 1; s < m; ++s) {
        const ExtremalParams p{k, m, (k - 1) * m + 2, s};
        const auto g = build_extremal(p);
        const auto qm = quotient_matrix(g, extremal_partition(p));
        EXPECT_NEAR(quotient_radius(qm), oracle::q_dense(g), 1e-9);
      }
}

TEST(QuotientMatrix, NonEquitableAndFractional) {
  // path a0 - b0 - a1 - b1 with parts {a0, a1} and {b0, b1}
  const std::vector<Edge> edges{{0, 0}, {1, 0}, {1, 1}};
  const auto g = BipartiteGraph::from_edge_list(2, 2, edges);
  const std::vector<std::vector<std::size_t>> parts{{0, 1}, {2, 3}};
  const auto qm = quotient_matrix(g, parts);
  EXPECT_FALSE(qm.equitable());
  EXPECT_EQ(qm.block_total(0, 0), 3);
  EXPECT_DOUBLE_EQ(qm.entry(0, 0), 1.5);
  EXPECT_FALSE(qm.integral());
  EXPECT_THROW(qm.integer_entry(0, 0), InputError);
}

TEST(QuotientMatrix, RejectsBadPartitions) {
  const auto g = complete_bipartite(2, 2);
  const std::vector<std::vector<std::size_t>> overlap{{0, 1}, {1, 2, 3}};
  const std::vector<std::vector<std::size_t>> missing{{0, 1}, {2}};
  const std::vector<std::vector<std::size_t>> empty_part{{0, 1, 2, 3}, {}};
  const std::vector<std::vector<std::size_t>> out_of_range{{0, 1, 2}, {3, 4}};
  EXPECT_THROW(quotient_matrix(g, overlap), InputError);
  EXPECT_THROW(quotient_matrix(g, missing), InputError);
  EXPECT_THROW(quotient_matrix(g, empty_part), InputError);
  EXPECT_THROW(quotient_matrix(g, out_of_range), InputError);
}

#include <gtest/gtest.h>

#include "bispan/errors.hpp"
#include "bispan/extremal.hpp"
#include "oracles.hpp"

using namespace bispan;

TEST(Extremal, StarIsJoinOfStars) {
  const auto g = build_extremal_star(3, 3, 7);
  EXPECT_EQ(g, join(complete_bipartite(1, 2), complete_bipartite(2, 5)));
  EXPECT_EQ(g, build_extremal({3, 3, 7, 1}));
  EXPECT_EQ(build_join_family(3, 7, 2, 4), build_extremal({3, 3, 7, 2}));
}

TEST(Extremal, Validation) {
  EXPECT_THROW(validate_theorem_params(2, 3, 7), InputError);
  EXPECT_THROW(validate_theorem_params(3, 2, 7), InputError);
  EXPECT_THROW(validate_theorem_params(3, 3, 6), InputError);
  EXPECT_NO_THROW(validate_theorem_params(3, 3, 7));
  EXPECT_THROW(validate({3, 3, 7, 0}), InputError);
  EXPECT_THROW(validate({3, 3, 7, 3}), InputError);
  EXPECT_THROW(build_join_family(3, 7, 0, 1), InputError);
  EXPECT_THROW(build_join_family(3, 7, 1, 7), InputError);
}

TEST(Extremal, PartitionShape) {
  const auto parts = extremal_partition({3, 3, 7, 2});
  ASSERT_EQ(parts.size(), 4u);
  EXPECT_EQ(parts[0], (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(parts[1], (std::vector<std::size_t>{2}));
  EXPECT_EQ(parts[2], (std::vector<std::size_t>{3, 4, 5, 6}));
  EXPECT_EQ(parts[3], (std::vector<std::size_t>{7, 8, 9}));
}

TEST(Extremal, ClosedFormQuotient) {
  const ExtremalParams p{4, 5, 17, 3};
  const auto closed = quotient_B1(p);
  const auto derived = quotient_matrix(build_extremal(p), extremal_partition(p));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(closed.integer_entry(i, j), derived.integer_entry(i, j));
}

TEST(Extremal, PhiAtTheFlagshipPoint) {
  EXPECT_EQ(phi_coeffs({3, 3, 7, 1}), Polynomial({0, -40, 49, -14, 1}));
  EXPECT_EQ(phi_star_coeffs(3, 3, 7), Polynomial({0, -40, 49, -14, 1}));
  EXPECT_EQ(psi_polynomial({3, 3, 7, 1}), Polynomial({20, -15, 1}));
}

TEST(Extremal, PhiMatchesLeibnizOnQuotient) {
  for (std::int64_t s = 1; s <= 4; ++s) {
    const ExtremalParams p{5, 5, 22, s};
    const auto b = quotient_B1(p);
    oracle::IntRows rows(4, std::vector<std::int64_t>(4));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) rows[i][j] = b.integer_entry(i, j);
    const auto phi = phi_coeffs(p);
    EXPECT_EQ(std::vector<std::int64_t>(phi.coefficients().begin(), phi.coefficients().end()),
              oracle::char_poly_leibniz(rows));
  }
}

TEST(Extremal, AuxiliaryFunctions) {
  EXPECT_EQ(h_eval(2, 3, 3, 7), -14);
  EXPECT_EQ(f_eval(6, 3, 3), 0);
  EXPECT_LT(f_eval(7, 3, 3), 0);
  // psi(m + n) and psi(m + (k-1)s) through both evaluators
  const ExtremalParams p{3, 3, 7, 2};
  EXPECT_EQ(psi_eval_exact(10, p), psi_polynomial(p).evaluate_exact(10));
  EXPECT_EQ(psi_eval_exact(3 + 2 * 2, p), 2 * h_eval(2, 3, 3, 7));
  EXPECT_DOUBLE_EQ(psi_eval(7.0, p), double(psi_eval_exact(7, p)));
}

TEST(Extremal, RootsAgainstDenseOracle) {
  EXPECT_NEAR(bound_qstar(3, 3, 7), oracle::q_dense(build_extremal_star(3, 3, 7)), 1e-10);
  const ExtremalParams p{3, 3, 7, 2};
  EXPECT_NEAR(q_family(p), oracle::q_dense(build_extremal(p)), 1e-10);
  EXPECT_LT(q_family(p), bound_qstar(3, 3, 7));
  const auto br = root_bracket(p);
  EXPECT_LT(br.lo, 7.0);
  EXPECT_GT(br.hi, 10.0);
  EXPECT_LT(br.hi, 10.0 + 1e-12);
}

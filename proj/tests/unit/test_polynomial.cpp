#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "bispan/errors.hpp"
#include "bispan/polynomial.hpp"
#include "oracles.hpp"

using namespace bispan;

TEST(Polynomial, TrimsAndFormats) {
  const Polynomial p({0, -40, 49, -14, 1, 0, 0});
  EXPECT_EQ(p.degree(), 4);
  EXPECT_TRUE(p.is_monic());
  EXPECT_EQ(to_string(p), "x^4 - 14x^3 + 49x^2 - 40x");
  EXPECT_EQ(to_string(Polynomial({-1, 0, -3})), "-3x^2 - 1");
  EXPECT_EQ(to_string(Polynomial({5})), "5");
  EXPECT_TRUE(Polynomial({0, 0}).is_zero());
  EXPECT_EQ(to_string(Polynomial()), "0");
  std::ostringstream out;
  out << Polynomial({1, 1});
  EXPECT_EQ(out.str(), "x + 1");
}

TEST(Polynomial, Arithmetic) {
  const Polynomial xm1({-1, 1});
  const Polynomial xp1({1, 1});
  EXPECT_EQ(xm1 * xp1, Polynomial({-1, 0, 1}));
  EXPECT_EQ(xm1 + xp1, Polynomial({0, 2}));
  EXPECT_EQ(xm1 - xm1, Polynomial());
  EXPECT_EQ(Polynomial({7, 3, 0, 2}).derivative(), Polynomial({3, 0, 6}));
  EXPECT_EQ(Polynomial({0, -40, 49, -14, 1}).evaluate_exact(1), -4);
  EXPECT_DOUBLE_EQ(Polynomial({1, 2, 3}).evaluate(2.0), 17.0);
}

TEST(CharPoly, ExtremalQuotient) {
  const IntMatrix b{4, {2, 0, 2, 0, 0, 7, 2, 5, 1, 2, 3, 0, 0, 2, 0, 2}};
  EXPECT_EQ(char_poly(b), Polynomial({0, -40, 49, -14, 1}));
}

TEST(CharPoly, AgreesWithLeibnizExpansion) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t order = 1 + rng() % 6;
    IntMatrix mtx{order, std::vector<std::int64_t>(order * order)};
    oracle::IntRows rows(order, std::vector<std::int64_t>(order));
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = 0; j < order; ++j) {
        const auto v = static_cast<std::int64_t>(rng() % 21) - 10;
        mtx.entries[i * order + j] = v;
        rows[i][j] = v;
      }
    const auto got = char_poly(mtx);
    const auto ref = oracle::char_poly_leibniz(rows);
    ASSERT_EQ(std::vector<std::int64_t>(got.coefficients().begin(), got.coefficients().end()), ref);
  }
}

TEST(CharPoly, Limits) {
  EXPECT_THROW(char_poly(IntMatrix{9, std::vector<std::int64_t>(81, 1)}), CapacityError);
  EXPECT_THROW(char_poly(IntMatrix{2, {1, 2, 3}}), InputError);
}

TEST(Roots, CubicFactorOfExtremalPolynomial) {
  const Polynomial cubic({-40, 49, -14, 1});
  const double root = largest_real_root(cubic, 0.0, 14.0);
  EXPECT_GT(root, 9.0);
  EXPECT_LT(root, 9.2);
  EXPECT_NEAR(cubic.evaluate(root), 0.0, 1e-9);
}

TEST(Roots, SimpleAndRepeated) {
  const Polynomial p({-6, 11, -6, 1});  // (x-1)(x-2)(x-3)
  const auto roots = real_roots_in(p, 0.0, 10.0);
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_NEAR(roots[0], 1.0, 1e-12);
  EXPECT_NEAR(roots[1], 2.0, 1e-12);
  EXPECT_NEAR(roots[2], 3.0, 1e-12);
  EXPECT_NEAR(largest_real_root(p, 0.0, 2.5), 2.0, 1e-12);

  // (x-2)^2 (x-5): the double root sits on a critical point and is exact
  const Polynomial q({-20, 24, -9, 1});
  EXPECT_NEAR(largest_real_root(q, 0.0, 10.0), 5.0, 1e-12);
  EXPECT_EQ(largest_real_root(q, 0.0, 4.0), 2.0);
  EXPECT_EQ(real_roots_in(q, 0.0, 10.0), (std::vector<double>{2.0, 5.0}));

  // x^2 + 1 has no real root
  EXPECT_THROW(largest_real_root(Polynomial({1, 0, 1}), -5.0, 5.0), NumericalError);
  EXPECT_THROW(largest_real_root(q, 2.5, 4.5), NumericalError);
}

TEST(Roots, ClusteredRoots) {
  // (x - 1000)(x - 1001)(x + 3)
  const auto p = Polynomial({-1000, 1}) * Polynomial({-1001, 1}) * Polynomial({3, 1});
  EXPECT_NEAR(largest_real_root(p, -10.0, 2000.0), 1001.0, 1e-9);
  const auto roots = real_roots_in(p, -10.0, 2000.0);
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_NEAR(roots[1], 1000.0, 1e-9);
}

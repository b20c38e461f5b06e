#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "bispan/polynomial.hpp"

namespace bispan::detail {

using Rational = boost::multiprecision::cpp_rational;
/// Ascending coefficients over Q, trailing zeros trimmed.
using RationalPoly = std::vector<Rational>;

RationalPoly to_rational(const Polynomial& p);

/// Remainder of a divided by b (b nonzero).
RationalPoly remainder(RationalPoly a, const RationalPoly& b);

/// Monic gcd; zero polynomial only if both inputs are zero.
RationalPoly gcd(RationalPoly a, RationalPoly b);

Rational evaluate(const RationalPoly& p, const Rational& x);

/// Number of distinct real roots in (c, +inf) by Sturm's theorem.
/// Requires p(c) != 0; returns -1 otherwise.
int roots_above(const RationalPoly& p, const Rational& c);

}  // namespace bispan::detail

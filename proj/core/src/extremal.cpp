#include "bispan/extremal.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "bispan/errors.hpp"

namespace bispan {

namespace {

std::string describe(const ExtremalParams& p) {
  return "(k=" + std::to_string(p.k) + ", m=" + std::to_string(p.m) + ", n=" +
         std::to_string(p.n) + ", s=" + std::to_string(p.s) + ")";
}

}  // namespace

void validate_theorem_params(std::int64_t k, std::int64_t m, std::int64_t n) {
  if (k < 3) throw InputError("k must be >= 3, got " + std::to_string(k));
  if (m < 3) throw InputError("m must be >= 3, got " + std::to_string(m));
  if (n < (k - 1) * m + 1)
    throw InputError("n must be >= (k-1)m+1 = " + std::to_string((k - 1) * m + 1) + ", got " +
                     std::to_string(n));
}

void validate(const ExtremalParams& p) {
  validate_theorem_params(p.k, p.m, p.n);
  if (p.s < 1 || p.s > p.m - 1)
    throw InputError("s must lie in [1, m-1] for " + describe(p));
}

BipartiteGraph build_join_family(std::int64_t m, std::int64_t n, std::int64_t s, std::int64_t r) {
  if (s < 1 || s >= m || r < 1 || r >= n)
    throw InputError("join family needs 1 <= s < m and 1 <= r < n");
  const auto sz = [](std::int64_t v) { return static_cast<std::size_t>(v); };
  return join(complete_bipartite(sz(s), sz(r)), complete_bipartite(sz(m - s), sz(n - r)));
}

BipartiteGraph build_extremal(const ExtremalParams& p) {
  validate(p);
  return build_join_family(p.m, p.n, p.s, p.r());
}

BipartiteGraph build_extremal_star(std::int64_t k, std::int64_t m, std::int64_t n) {
  return build_extremal({k, m, n, 1});
}

std::vector<std::vector<std::size_t>> extremal_partition(const ExtremalParams& p) {
  validate(p);
  const auto m = static_cast<std::size_t>(p.m);
  const auto n = static_cast<std::size_t>(p.n);
  const auto s = static_cast<std::size_t>(p.s);
  const auto r = static_cast<std::size_t>(p.r());
  std::vector<std::vector<std::size_t>> parts(4);
  for (std::size_t a = 0; a < s; ++a) parts[0].push_back(a);
  for (std::size_t a = s; a < m; ++a) parts[1].push_back(a);
  for (std::size_t b = 0; b < r; ++b) parts[2].push_back(m + b);
  for (std::size_t b = r; b < n; ++b) parts[3].push_back(m + b);
  return parts;
}

QuotientMatrix quotient_B1(const ExtremalParams& p) {
  validate(p);
  const auto [k, m, n, s] = p;
  const auto r = p.r();
  const std::vector<std::size_t> sizes{static_cast<std::size_t>(s), static_cast<std::size_t>(m - s),
                                       static_cast<std::size_t>(r),
                                       static_cast<std::size_t>(n - r)};
  const std::int64_t entries[16] = {
      r, 0,     r, 0,      //
      0, n,     r, n - r,  //
      s, m - s, m, 0,      //
      0, m - s, 0, m - s,  //
  };
  std::vector<std::int64_t> totals(16);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      totals[i * 4 + j] = entries[i * 4 + j] * static_cast<std::int64_t>(sizes[i]);
  return QuotientMatrix(sizes, std::move(totals), true);
}

Polynomial phi_coeffs(const ExtremalParams& p) {
  validate(p);
  const auto [k, m, n, s] = p;
  const std::int64_t c3 = -(2 * m + n + k * s - 2 * s);
  const std::int64_t c2 = m * m + m * n + 2 * k * m * s + k * n * s - 3 * m * s - n * s -
                          2 * k * s * s + 2 * s * s;
  const std::int64_t c1 = k * m * s * s - m * s * s + k * n * s * s - n * s * s - k * m * m * s +
                          m * m * s - k * m * n * s + m * n * s;
  return Polynomial({0, c1, c2, c3, 1});
}

Polynomial phi_star_coeffs(std::int64_t k, std::int64_t m, std::int64_t n) {
  validate_theorem_params(k, m, n);
  const std::int64_t c3 = -(2 * m + n + k - 2);
  const std::int64_t c2 = m * m + m * n + 2 * k * m + k * n - 3 * m - n - 2 * k + 2;
  const std::int64_t c1 = k * m - m + k * n - n - k * m * m + m * m - k * m * n + m * n;
  return Polynomial({0, c1, c2, c3, 1});
}

Polynomial psi_polynomial(const ExtremalParams& p) {
  validate(p);
  const auto [k, m, n, s] = p;
  const std::int64_t c2 = k - 2;
  const std::int64_t c1 = -(2 * k * m + k * n - 3 * m - n - 2 * k * s - 2 * k + 2 * s + 2);
  const std::int64_t c0 = -k * m * s - k * m + m * s + m - k * n * s - k * n + n * s + n +
                          k * m * m - m * m + k * m * n - m * n;
  return Polynomial({c0, c1, c2});
}

double psi_eval(double x, const ExtremalParams& p) { return psi_polynomial(p).evaluate(x); }

std::int64_t psi_eval_exact(std::int64_t x, const ExtremalParams& p) {
  return psi_polynomial(p).evaluate_exact(x);
}

std::int64_t h_eval(std::int64_t s, std::int64_t k, std::int64_t m, std::int64_t n) {
  return k * (k - 1) * s * s - (k * n - 2 * k + 2) * s + m - n;
}

std::int64_t f_eval(std::int64_t n, std::int64_t k, std::int64_t m) {
  return -n * n + (k * m - 2 * m) * n + k * m * m - m * m;
}

RootBracket root_bracket(const ExtremalParams& p) {
  validate(p);
  constexpr double kWiden = 8 * std::numeric_limits<double>::epsilon();
  const auto lo = static_cast<double>(p.m + p.r());
  const auto hi = static_cast<double>(p.m + p.n);
  return {lo * (1.0 - kWiden), hi * (1.0 + kWiden)};
}

double q_family(const ExtremalParams& p) {
  const auto bracket = root_bracket(p);
  return largest_real_root(phi_coeffs(p), bracket.lo, bracket.hi);
}

double bound_qstar(std::int64_t k, std::int64_t m, std::int64_t n) {
  return q_family({k, m, n, 1});
}

}  // namespace bispan

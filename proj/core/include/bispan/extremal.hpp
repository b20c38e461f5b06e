#pragma once

#include <cstdint>
#include <vector>

#include "bispan/bipartite_graph.hpp"
#include "bispan/polynomial.hpp"
#include "bispan/spectral.hpp"

namespace bispan {

/// Parameters of the family K_{s,(k-1)s} join K_{m-s,n-(k-1)s}.
///
/// Valid when k >= 3, m >= 3, n >= (k-1)m + 1 and 1 <= s <= m - 1.
/// s = 1 gives the extremal graph G_* = K_{1,k-1} join K_{m-1,n-k+1}.
struct ExtremalParams {
  std::int64_t k = 3;
  std::int64_t m = 3;
  std::int64_t n = 7;
  std::int64_t s = 1;

  /// Size of N(S), the B-side of the left join operand.
  std::int64_t r() const noexcept { return (k - 1) * s; }

  friend bool operator==(const ExtremalParams&, const ExtremalParams&) = default;
};

/// Throws InputError naming the first violated range.
void validate(const ExtremalParams& p);

/// Checks only the theorem hypotheses k >= 3, m >= 3, n >= (k-1)m + 1.
void validate_theorem_params(std::int64_t k, std::int64_t m, std::int64_t n);

/// K_{s,r} join K_{m-s,n-r} for any 1 <= s < m, 1 <= r < n (no hypothesis checks).
BipartiteGraph build_join_family(std::int64_t m, std::int64_t n, std::int64_t s, std::int64_t r);

BipartiteGraph build_extremal(const ExtremalParams& p);

/// G_* for the theorem parameters.
BipartiteGraph build_extremal_star(std::int64_t k, std::int64_t m, std::int64_t n);

/// Partition S | A-S | N(S) | B-N(S) in the combined numbering, with
/// S = {0..s-1} and N(S) = {0..r-1} on the B side.
std::vector<std::vector<std::size_t>> extremal_partition(const ExtremalParams& p);

/// Closed-form quotient matrix of Q under extremal_partition:
///
///   [ (k-1)s   0      (k-1)s  0          ]
///   [ 0        n      (k-1)s  n-(k-1)s   ]
///   [ s        m-s    m       0          ]
///   [ 0        m-s    0       m-s        ]
QuotientMatrix quotient_B1(const ExtremalParams& p);

/// Closed-form characteristic polynomial of quotient_B1(p):
///   x^4 - (2m+n+ks-2s)x^3
///       + (m^2+mn+2kms+kns-3ms-ns-2ks^2+2s^2)x^2
///       + (kms^2-ms^2+kns^2-ns^2-km^2s+m^2s-kmns+mns)x
Polynomial phi_coeffs(const ExtremalParams& p);

/// The s = 1 polynomial in its own closed form, written independently of
/// phi_coeffs:
///   x^4 - (2m+n+k-2)x^3 + (m^2+mn+2km+kn-3m-n-2k+2)x^2
///       + (km-m+kn-n-km^2+m^2-kmn+mn)x
Polynomial phi_star_coeffs(std::int64_t k, std::int64_t m, std::int64_t n);

/// psi(x) = (k-2)x^2 - (2km+kn-3m-n-2ks-2k+2s+2)x
///          - kms - km + ms + m - kns - kn + ns + n + km^2 - m^2 + kmn - mn
///
/// It satisfies phi_star(x) - phi(x) = x(s-1)psi(x).
Polynomial psi_polynomial(const ExtremalParams& p);
double psi_eval(double x, const ExtremalParams& p);
std::int64_t psi_eval_exact(std::int64_t x, const ExtremalParams& p);

/// h(s) = k(k-1)s^2 - (kn-2k+2)s + m - n. psi(m+(k-1)s) = (k-1)h(s).
std::int64_t h_eval(std::int64_t s, std::int64_t k, std::int64_t m, std::int64_t n);

/// Upper bound on psi(m+n) over 1 <= s <= m-1:
/// f(n) = -n^2 + (km-2m)n + km^2 - m^2, which vanishes at n = (k-1)m.
/// Unrelated to the per-vertex DegreeDemand.
std::int64_t f_eval(std::int64_t n, std::int64_t k, std::int64_t m);

/// Root bracket (m+(k-1)s, m+n), each end pushed out by a few ulps.
struct RootBracket {
  double lo;
  double hi;
};
RootBracket root_bracket(const ExtremalParams& p);

/// q(G_1) for G_1 = build_extremal(p), as the largest root of phi_coeffs(p).
double q_family(const ExtremalParams& p);

/// q_* = q(G_*), the spectral threshold of the theorem.
double bound_qstar(std::int64_t k, std::int64_t m, std::int64_t n);

}  // namespace bispan

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bispan/bipartite_graph.hpp"
#include "bispan/degree_demand.hpp"
#include "bispan/extremal.hpp"

namespace bispan {

// ---------------------------------------------------------------------------
// Enumeration of labeled bipartite graphs

inline constexpr std::size_t kEnumerationEdgeCap = 24;

/// Edge (a, b) is bit a * n + b of the mask.
BipartiteGraph graph_from_mask(std::size_t m, std::size_t n, std::uint64_t mask);
std::uint64_t mask_of(const BipartiteGraph& g);

/// Connectivity straight from the mask, without building a graph.
bool mask_connected(std::size_t m, std::size_t n, std::uint64_t mask);

/// Walks every labeled bipartite graph on sides m, n in increasing mask
/// order, optionally skipping disconnected ones. A sub-range of masks can
/// be given to split the work. m * n is capped at kEnumerationEdgeCap
/// (CapacityError).
class BipartiteEnumerator {
 public:
  BipartiteEnumerator(std::size_t m, std::size_t n, bool connected_only);
  BipartiteEnumerator(std::size_t m, std::size_t n, bool connected_only, std::uint64_t first,
                      std::uint64_t last);

  /// Next graph, or nullopt when the range is exhausted.
  std::optional<BipartiteGraph> next();
  /// Mask of the graph most recently returned by next().
  std::uint64_t mask() const noexcept { return current_; }

  static std::uint64_t universe_size(std::size_t m, std::size_t n);

 private:
  std::size_t m_;
  std::size_t n_;
  bool connected_only_;
  std::uint64_t next_;
  std::uint64_t last_;
  std::uint64_t current_ = 0;
};

std::uint64_t count_bipartite(std::size_t m, std::size_t n, bool connected_only);

// ---------------------------------------------------------------------------
// Exhaustive theorem check

struct TheoremOptions {
  /// Graphs with q(G) >= q_* - tol count as reaching the bound.
  double tol = 1e-7;
  /// Worker threads; 0 means hardware concurrency.
  std::size_t jobs = 0;
};

struct Counterexample {
  std::uint64_t mask = 0;
  std::vector<Edge> edges;
  double q = 0.0;
  std::string reason;
};

struct TheoremReport {
  std::int64_t k = 0;
  std::int64_t m = 0;
  std::int64_t n = 0;
  double tol = 0.0;
  double qstar = 0.0;
  /// q(G_*) by the dense eigensolver, for comparison with qstar.
  double q_extremal_graph = 0.0;
  std::uint64_t graphs_total = 0;
  std::uint64_t graphs_connected = 0;
  std::uint64_t graphs_above_bound = 0;
  std::uint64_t certificates_verified = 0;
  /// Enumerated graphs at or above the bound that are copies of G_*.
  std::uint64_t extremal_copies = 0;
  std::vector<Counterexample> counterexamples;
  bool extremal_infeasible = false;
  bool extremal_attains_bound = false;
  bool extremal_found = false;

  bool ok() const noexcept { return counterexamples.empty() && extremal_found; }
};

/// For every connected G on sides m, n with q(G) >= q_* - tol, requires a
/// verified spanning tree with d_T(v) >= k on A, or G isomorphic to G_*.
/// Requires the theorem hypotheses (InputError) and m * n within the
/// enumeration cap (CapacityError). Results do not depend on `jobs`.
TheoremReport theorem_check(std::int64_t k, std::int64_t m, std::int64_t n,
                            const TheoremOptions& options = {});

// ---------------------------------------------------------------------------
// Pointwise proof sweep

struct SweepGrid {
  std::int64_t k_min = 3;
  std::int64_t k_max = 5;
  std::int64_t m_min = 3;
  std::int64_t m_max = 5;
  /// n runs over (k-1)m + e for e in [n_extra_min, n_extra_max]. e = 0 is
  /// the boundary n = (k-1)m just outside the hypotheses.
  std::int64_t n_extra_min = 1;
  std::int64_t n_extra_max = 5;
};

/// Throws InputError for empty ranges or values below the hypotheses.
void validate(const SweepGrid& grid);

struct SweepCheck {
  std::string name;
  bool passed = false;
};

struct SweepPoint {
  ExtremalParams params;
  /// n = (k-1)m: only f(n) = 0 is checked and no family is built.
  bool boundary = false;
  /// Largest root of phi for this s (zero at boundary points).
  double q1 = 0.0;
  double qstar = 0.0;
  double q_dense = 0.0;
  std::vector<SweepCheck> checks;
};

struct SweepReport {
  SweepGrid grid;
  std::vector<SweepPoint> points;
  std::vector<std::string> failures;
  std::size_t checks_run = 0;

  bool ok() const noexcept { return failures.empty(); }
};

/// Checks at every grid point, exactly wherever the quantities are integral:
///  - char poly of the graph-derived quotient = closed form phi (and the
///    printed s = 1 form), quotient equitable and equal to quotient_B1;
///  - phi_star - phi = x(s-1)psi coefficientwise;
///  - psi(m+n) <= f(n) < 0 and f((k-1)m) = 0;
///  - psi(m+(k-1)s) = (k-1)h(s), with h(s), h(2), h(m-1) < 0 for s >= 2;
///  - m+(k-1)s < q1 < m+n, q1 equal to the dense q(G_1) within 1e-8;
///  - q1 < q_* - 1e-8 for s >= 2 and |q1 - q_*| <= 1e-8 at s = 1;
///  - q(K_{s,r} join K_{m-s,n-r}) <= q1 for 1 <= r <= (k-1)s.
/// Failures are recorded, never thrown.
SweepReport proof_sweep(const SweepGrid& grid = {});

// ---------------------------------------------------------------------------
// Randomized checks

/// Random connected bipartite graph on the given sides: a random spanning
/// tree plus each remaining edge with probability `density`.
BipartiteGraph random_connected_bipartite(std::size_t m, std::size_t n, double density,
                                          std::mt19937_64& rng);

struct MonotonicityReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t violations = 0;
  std::size_t identical_pairs = 0;
  std::size_t identical_mismatches = 0;
  /// Pairs with H != G small enough for the exact strictness check.
  std::size_t strict_checked = 0;
  std::size_t strict_confirmed = 0;
  double max_excess = 0.0;  // max of q(H) - q(G)

  bool ok() const noexcept {
    return violations == 0 && identical_mismatches == 0 && strict_confirmed == strict_checked;
  }
};

/// Random connected G (m <= 6, n <= 8) and a connected spanning subgraph H
/// obtained by deleting non-bridge edges. Asserts q(H) <= q(G) + 1e-9 and,
/// when m + n <= 8 and H != G, proves q(H) < q(G) exactly with Sturm
/// sequences on the characteristic polynomials.
MonotonicityReport monotonicity_fuzz(std::size_t trials, std::uint64_t seed);

/// Exact test of q(H) < q(G) for integer symmetric matrices of order <= 8
/// given numerical estimates. Returns nullopt if it cannot isolate q(G).
std::optional<bool> strictly_below_exact(const SymMatrix& q_h, const SymMatrix& q_g, double q_g_estimate);

struct FeasibilityInstance {
  BipartiteGraph graph;
  DegreeDemand demand;
};

/// Connected instance with m <= 8, n <= 12 and f(v) in {2, 3, 4}.
FeasibilityInstance random_feasibility_instance(std::mt19937_64& rng);

struct CheckerFuzzReport {
  std::uint64_t seed = 0;
  std::size_t instances = 0;
  std::size_t feasible = 0;
  std::size_t infeasible = 0;
  std::size_t predicate_disagreements = 0;
  std::size_t bad_violations = 0;
  std::size_t constructor_mismatches = 0;
  std::size_t bad_certificates = 0;
  std::size_t internal_errors = 0;

  bool checkers_agree() const noexcept { return predicate_disagreements == 0 && bad_violations == 0; }
  bool constructor_ok() const noexcept {
    return constructor_mismatches == 0 && bad_certificates == 0 && internal_errors == 0;
  }
};

/// Runs both checkers and construct_tree on `instances` random instances.
/// Every returned violation and certificate is re-verified independently.
CheckerFuzzReport checker_fuzz(std::size_t instances, std::uint64_t seed);

struct ConstructorSweepReport {
  std::size_t m = 0;
  std::size_t n = 0;
  int k = 0;
  std::uint64_t graphs = 0;
  std::uint64_t feasible = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t bad_certificates = 0;
  std::uint64_t internal_errors = 0;

  bool ok() const noexcept { return mismatches == 0 && bad_certificates == 0 && internal_errors == 0; }
};

/// construct_tree against check_condition_bruteforce with f = k on every
/// connected labeled graph on sides m, n.
ConstructorSweepReport constructor_sweep(std::size_t m, std::size_t n, int k, std::size_t jobs = 0);

}  // namespace bispan

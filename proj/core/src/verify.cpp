#include "bispan/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "bispan/errors.hpp"
#include "bispan/polynomial.hpp"
#include "bispan/spectral.hpp"
#include "bispan/trees.hpp"
#include "sturm.hpp"

namespace bispan {

namespace {

constexpr double kRootAgreement = 1e-8;
constexpr double kMonotoneSlack = 1e-9;

std::size_t resolve_jobs(std::size_t jobs) {
  if (jobs != 0) return jobs;
  const auto hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Splits [0, total) into `chunks` contiguous ranges and runs fn(index, lo, hi)
// on a pool of `jobs` threads. Results are stored by chunk index so merging
// in index order is deterministic regardless of scheduling.
template <typename Result, typename Fn>
std::vector<Result> run_chunked(std::uint64_t total, std::size_t chunks, std::size_t jobs, Fn fn) {
  chunks = static_cast<std::size_t>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(chunks, total)));
  std::vector<Result> results(chunks);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const auto i = next.fetch_add(1);
      if (i >= chunks) return;
      const std::uint64_t lo = total * i / chunks;
      const std::uint64_t hi = total * (i + 1) / chunks;
      try {
        results[i] = fn(i, lo, hi);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(chunks);
      }
    }
  };
  const auto threads = std::min(resolve_jobs(jobs), chunks);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

void require_enumerable(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw InputError("enumeration needs both sides nonempty");
  if (m * n > kEnumerationEdgeCap)
    throw CapacityError("enumeration limited to m * n <= " + std::to_string(kEnumerationEdgeCap) +
                        " (got " + std::to_string(m * n) + ")");
}

std::string point_label(const ExtremalParams& p) {
  std::ostringstream os;
  os << "k=" << p.k << " m=" << p.m << " n=" << p.n << " s=" << p.s;
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------

BipartiteGraph graph_from_mask(std::size_t m, std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if ((mask >> (a * n + b)) & 1U) edges.push_back({a, b});
  return BipartiteGraph::from_edge_list(m, n, edges);
}

std::uint64_t mask_of(const BipartiteGraph& g) {
  const auto n = g.right_size();
  if (g.left_size() * n > 64) throw CapacityError("graph too large for a 64-bit edge mask");
  std::uint64_t mask = 0;
  for (const auto& e : g.edges()) mask |= std::uint64_t{1} << (e.a * n + e.b);
  return mask;
}

bool mask_connected(std::size_t m, std::size_t n, std::uint64_t mask) {
  const std::uint64_t row_bits = (n >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::uint64_t rows[64] = {};
  for (std::size_t a = 0; a < m; ++a) {
    rows[a] = (mask >> (a * n)) & row_bits;
    if (rows[a] == 0) return false;
  }
  std::uint64_t left = 1;
  std::uint64_t right = rows[0];
  const std::uint64_t all_left = (m >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  for (;;) {
    std::uint64_t grown = left;
    for (std::size_t a = 0; a < m; ++a)
      if ((rows[a] & right) != 0) grown |= std::uint64_t{1} << a;
    if (grown == left) break;
    left = grown;
    for (std::size_t a = 0; a < m; ++a)
      if ((left >> a) & 1U) right |= rows[a];
  }
  return left == all_left && right == row_bits;
}

BipartiteEnumerator::BipartiteEnumerator(std::size_t m, std::size_t n, bool connected_only)
    : BipartiteEnumerator(m, n, connected_only, 0, universe_size(m, n)) {}

BipartiteEnumerator::BipartiteEnumerator(std::size_t m, std::size_t n, bool connected_only,
                                         std::uint64_t first, std::uint64_t last)
    : m_(m), n_(n), connected_only_(connected_only), next_(first), last_(last) {
  require_enumerable(m, n);
  last_ = std::min(last_, universe_size(m, n));
}

std::uint64_t BipartiteEnumerator::universe_size(std::size_t m, std::size_t n) {
  require_enumerable(m, n);
  return std::uint64_t{1} << (m * n);
}

std::optional<BipartiteGraph> BipartiteEnumerator::next() {
  while (next_ < last_) {
    const auto mask = next_++;
    if (connected_only_ && !mask_connected(m_, n_, mask)) continue;
    current_ = mask;
    return graph_from_mask(m_, n_, mask);
  }
  return std::nullopt;
}

std::uint64_t count_bipartite(std::size_t m, std::size_t n, bool connected_only) {
  const auto total = BipartiteEnumerator::universe_size(m, n);
  if (!connected_only) return total;
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < total; ++mask)
    if (mask_connected(m, n, mask)) ++count;
  return count;
}

// ---------------------------------------------------------------------------

namespace {

struct TheoremChunk {
  std::uint64_t connected = 0;
  std::uint64_t above = 0;
  std::uint64_t certificates = 0;
  std::uint64_t copies = 0;
  std::vector<Counterexample> counterexamples;
};

}  // namespace

TheoremReport theorem_check(std::int64_t k, std::int64_t m, std::int64_t n,
                            const TheoremOptions& options) {
  validate_theorem_params(k, m, n);
  const auto mm = static_cast<std::size_t>(m);
  const auto nn = static_cast<std::size_t>(n);
  require_enumerable(mm, nn);

  TheoremReport report;
  report.k = k;
  report.m = m;
  report.n = n;
  report.tol = options.tol;
  report.qstar = bound_qstar(k, m, n);

  const auto demand = DegreeDemand::uniform(mm, static_cast<int>(k));
  const auto star = build_extremal_star(k, m, n);
  report.q_extremal_graph = signless_spectral_radius(star).value;
  report.extremal_infeasible = !is_feasible(construct_tree(star, demand));
  report.extremal_attains_bound = std::abs(report.q_extremal_graph - report.qstar) <= options.tol;

  const auto total = BipartiteEnumerator::universe_size(mm, nn);
  report.graphs_total = total;
  const double threshold = report.qstar - options.tol;

  auto chunks = run_chunked<TheoremChunk>(total, 256, options.jobs, [&](std::size_t, std::uint64_t lo,
                                                                        std::uint64_t hi) {
    TheoremChunk out;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      if (!mask_connected(mm, nn, mask)) continue;
      ++out.connected;
      const auto g = graph_from_mask(mm, nn, mask);
      double q = 0.0;
      try {
        q = signless_spectral_radius(g).value;
      } catch (const NumericalError& e) {
        // A solver failure is reported, never skipped.
        q = e.best_estimate();
        out.counterexamples.push_back({mask, g.edges(), q, std::string("spectral solver: ") + e.what()});
        continue;
      }
      if (q < threshold) continue;
      ++out.above;

      const bool near_bound = std::abs(q - report.qstar) <= options.tol;
      const auto result = construct_tree(g, demand);
      bool feasible = false;
      if (const auto* cert = std::get_if<TreeCertificate>(&result)) {
        if (verify_certificate(g, demand, *cert)) {
          ++out.certificates;
          feasible = true;
        } else {
          out.counterexamples.push_back({mask, g.edges(), q, "certificate failed verification"});
          continue;
        }
      }
      if (!feasible || near_bound) {
        const bool copy = part_preserving_isomorphic(g, star);
        if (copy) ++out.copies;
        if (!feasible && !copy)
          out.counterexamples.push_back({mask, g.edges(), q, "no qualifying spanning tree"});
      }
    }
    return out;
  });

  for (auto& c : chunks) {
    report.graphs_connected += c.connected;
    report.graphs_above_bound += c.above;
    report.certificates_verified += c.certificates;
    report.extremal_copies += c.copies;
    for (auto& ce : c.counterexamples) report.counterexamples.push_back(std::move(ce));
  }
  report.extremal_found =
      report.extremal_copies > 0 && report.extremal_infeasible && report.extremal_attains_bound;
  return report;
}

// ---------------------------------------------------------------------------

void validate(const SweepGrid& grid) {
  if (grid.k_min > grid.k_max || grid.m_min > grid.m_max || grid.n_extra_min > grid.n_extra_max)
    throw InputError("sweep grid has an empty range");
  if (grid.k_min < 3) throw InputError("sweep grid needs k >= 3");
  if (grid.m_min < 3) throw InputError("sweep grid needs m >= 3");
  if (grid.n_extra_min < 0) throw InputError("sweep grid needs n >= (k-1)m");
}

SweepReport proof_sweep(const SweepGrid& grid) {
  validate(grid);
  SweepReport report;
  report.grid = grid;

  for (auto k = grid.k_min; k <= grid.k_max; ++k) {
    for (auto m = grid.m_min; m <= grid.m_max; ++m) {
      for (auto e = grid.n_extra_min; e <= grid.n_extra_max; ++e) {
        const auto n = (k - 1) * m + e;

        if (e == 0) {
          SweepPoint point;
          point.params = {k, m, n, 0};
          point.boundary = true;
          point.checks.push_back({"f_boundary_zero", f_eval(n, k, m) == 0});
          for (const auto& c : point.checks)
            if (!c.passed)
              report.failures.push_back("boundary k=" + std::to_string(k) + " m=" + std::to_string(m) +
                                        ": " + c.name);
          report.checks_run += point.checks.size();
          report.points.push_back(std::move(point));
          continue;
        }

        const double qstar = bound_qstar(k, m, n);
        const auto phi_star = phi_star_coeffs(k, m, n);
        for (std::int64_t s = 1; s <= m - 1; ++s) {
          const ExtremalParams p{k, m, n, s};
          SweepPoint point;
          point.params = p;
          point.qstar = qstar;
          auto check = [&](std::string name, bool passed) { point.checks.push_back({std::move(name), passed}); };

          const auto g1 = build_extremal(p);
          const auto partition = extremal_partition(p);
          const auto derived = quotient_matrix(g1, partition);
          const auto closed = quotient_B1(p);
          const auto phi = phi_coeffs(p);

          bool same_quotient = derived.order() == closed.order();
          for (std::size_t i = 0; same_quotient && i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
              same_quotient = same_quotient && derived.block_total(i, j) == closed.block_total(i, j);
          check("quotient_equitable", derived.equitable());
          check("quotient_matches_closed_form", same_quotient);
          check("char_poly_matches_phi", char_poly(derived) == phi && char_poly(closed) == phi);
          if (s == 1) check("phi_s1_matches_phi_star", phi == phi_star);

          const auto psi = psi_polynomial(p);
          const auto rhs = Polynomial({0, 1}) * Polynomial({s - 1}) * psi;
          check("phi_difference_identity", (phi_star - phi - rhs).is_zero());

          const auto psi_top = psi.evaluate_exact(m + n);
          const auto f_n = f_eval(n, k, m);
          check("f_vanishes_at_boundary", f_eval((k - 1) * m, k, m) == 0);
          check("psi_top_below_f", psi_top <= f_n);
          check("f_negative", f_n < 0);
          check("psi_top_negative", psi_top < 0);

          const auto psi_bottom = psi.evaluate_exact(m + (k - 1) * s);
          check("psi_bottom_equals_scaled_h", psi_bottom == (k - 1) * h_eval(s, k, m, n));
          if (s >= 2) {
            const auto h2 = h_eval(2, k, m, n);
            const auto hm = h_eval(m - 1, k, m, n);
            const auto hs = h_eval(s, k, m, n);
            check("h_at_2_negative", h2 < 0);
            check("h_at_m_minus_1_negative", hm < 0);
            check("h_below_endpoint_max", hs <= std::max(h2, hm));
            check("psi_bottom_negative", psi_bottom < 0);
          }

          const double q1 = q_family(p);
          point.q1 = q1;
          point.q_dense = signless_spectral_radius(g1).value;
          check("q1_above_lower_bound", q1 > static_cast<double>(m + (k - 1) * s));
          check("q1_below_complete", q1 < static_cast<double>(m + n));
          check("q1_matches_dense", std::abs(q1 - point.q_dense) <= kRootAgreement);
          if (s >= 2) {
            check("q1_below_qstar", q1 < qstar - kRootAgreement);
            check("psi_at_q1_negative", psi.evaluate(q1) < 0.0);
            check("phi_star_at_q1_negative", phi_star.evaluate(q1) < 0.0);
          } else {
            check("q1_equals_qstar", std::abs(q1 - qstar) <= kRootAgreement);
          }

          bool chain_ok = true;
          for (std::int64_t r = 1; r <= (k - 1) * s; ++r) {
            const double q_sub = signless_spectral_radius(build_join_family(m, n, s, r)).value;
            chain_ok = chain_ok && q_sub <= q1 + kMonotoneSlack;
          }
          check("subfamily_below_q1", chain_ok);

          for (const auto& c : point.checks)
            if (!c.passed) report.failures.push_back(point_label(p) + ": " + c.name);
          report.checks_run += point.checks.size();
          report.points.push_back(std::move(point));
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

BipartiteGraph random_connected_bipartite(std::size_t m, std::size_t n, double density,
                                          std::mt19937_64& rng) {
  if (m == 0 || n == 0) throw InputError("random graph needs both sides nonempty");
  std::vector<Edge> edges;
  std::vector<std::size_t> left_in{0};
  std::vector<std::size_t> right_in{0};
  edges.push_back({0, 0});

  std::vector<std::size_t> order;  // combined numbering of the vertices still outside
  for (std::size_t a = 1; a < m; ++a) order.push_back(a);
  for (std::size_t b = 1; b < n; ++b) order.push_back(m + b);
  std::shuffle(order.begin(), order.end(), rng);
  for (auto v : order) {
    if (v < m) {
      std::uniform_int_distribution<std::size_t> pick(0, right_in.size() - 1);
      edges.push_back({v, right_in[pick(rng)]});
      left_in.push_back(v);
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, left_in.size() - 1);
      edges.push_back({left_in[pick(rng)], v - m});
      right_in.push_back(v - m);
    }
  }
  std::bernoulli_distribution extra(std::clamp(density, 0.0, 1.0));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (extra(rng)) edges.push_back({a, b});
  return BipartiteGraph::from_edge_list(m, n, edges);
}

std::optional<bool> strictly_below_exact(const SymMatrix& q_h, const SymMatrix& q_g,
                                         double q_g_estimate) {
  using detail::Rational;
  const auto phi_g = detail::to_rational(char_poly(q_g));
  const auto phi_h = detail::to_rational(char_poly(q_h));

  // Isolate q(G) in (lo, hi) with no other root of phi_g above lo.
  Rational lo;
  Rational hi;
  bool isolated = false;
  for (double delta : {1e-6, 1e-8, 1e-10, 1e-4}) {
    const double scale = std::max(1.0, std::abs(q_g_estimate));
    lo = Rational(q_g_estimate - delta * scale);
    hi = Rational(q_g_estimate + delta * scale);
    if (detail::roots_above(phi_g, lo) == 1 && detail::roots_above(phi_g, hi) == 0) {
      isolated = true;
      break;
    }
  }
  if (!isolated) return std::nullopt;

  // q(H) = q(G) exactly iff q(G) is a common root.
  const auto common = detail::gcd(phi_g, phi_h);
  if (common.size() > 1 && detail::roots_above(common, lo) >= 1) return false;

  for (int it = 0; it < 400; ++it) {
    const int above_lo = detail::roots_above(phi_h, lo);
    const int above_hi = detail::roots_above(phi_h, hi);
    if (above_lo == 0) return true;   // q(H) <= lo < q(G)
    if (above_hi > 0) return false;   // q(H) > hi > q(G)
    Rational mid = (lo + hi) / 2;
    int g_above = detail::roots_above(phi_g, mid);
    if (g_above < 0 || detail::roots_above(phi_h, mid) < 0) {
      mid = (lo + 2 * hi) / 3;  // landed on a root; step off it
      g_above = detail::roots_above(phi_g, mid);
      if (g_above < 0 || detail::roots_above(phi_h, mid) < 0) return std::nullopt;
    }
    if (g_above == 1) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::nullopt;
}

MonotonicityReport monotonicity_fuzz(std::size_t trials, std::uint64_t seed) {
  MonotonicityReport report;
  report.seed = seed;
  report.trials = trials;
  report.max_excess = -std::numeric_limits<double>::infinity();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> left_size(1, 6);
  std::uniform_int_distribution<std::size_t> right_size(1, 8);
  std::uniform_real_distribution<double> density(0.0, 1.0);

  for (std::size_t t = 0; t < trials; ++t) {
    const auto m = left_size(rng);
    const auto n = right_size(rng);
    const auto g = random_connected_bipartite(m, n, density(rng), rng);

    auto kept = g.edges();
    std::shuffle(kept.begin(), kept.end(), rng);
    const auto removable = g.edge_count() - (m + n - 1);
    const auto target = std::uniform_int_distribution<std::size_t>(0, removable)(rng);
    std::size_t removed = 0;
    for (std::size_t i = 0; i < kept.size() && removed < target;) {
      auto trial = kept;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
      if (is_connected(BipartiteGraph::from_edge_list(m, n, trial))) {
        kept = std::move(trial);
        ++removed;
      } else {
        ++i;
      }
    }
    const auto h = BipartiteGraph::from_edge_list(m, n, kept);

    const auto q_g_mat = signless_laplacian(g);
    const auto q_h_mat = signless_laplacian(h);
    const double q_g = spectral_radius(q_g_mat).value;
    const double q_h = spectral_radius(q_h_mat).value;
    report.max_excess = std::max(report.max_excess, q_h - q_g);
    if (q_h > q_g + kMonotoneSlack) ++report.violations;

    if (h == g) {
      ++report.identical_pairs;
      if (std::abs(q_h - q_g) > 1e-12) ++report.identical_mismatches;
    } else if (m + n <= kCharPolyOrderCap) {
      ++report.strict_checked;
      if (strictly_below_exact(q_h_mat, q_g_mat, q_g).value_or(false)) ++report.strict_confirmed;
    }
  }
  return report;
}

FeasibilityInstance random_feasibility_instance(std::mt19937_64& rng) {
  const auto m = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
  const auto n = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
  const double density = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  auto g = random_connected_bipartite(m, n, density, rng);
  std::uniform_int_distribution<int> demand(2, 4);
  std::vector<int> f(m);
  for (auto& v : f) v = demand(rng);
  return {std::move(g), DegreeDemand(std::move(f))};
}

CheckerFuzzReport checker_fuzz(std::size_t instances, std::uint64_t seed) {
  CheckerFuzzReport report;
  report.seed = seed;
  report.instances = instances;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < instances; ++i) {
    const auto inst = random_feasibility_instance(rng);
    const auto& g = inst.graph;
    const auto& f = inst.demand;
    try {
      const auto brute = check_condition_bruteforce(g, f);
      const auto flow = check_condition_flow(g, f);
      if (brute.has_value() != flow.has_value()) ++report.predicate_disagreements;
      if (brute && !violates_condition(g, f, brute->subset)) ++report.bad_violations;
      if (flow && !violates_condition(g, f, flow->subset)) ++report.bad_violations;
      if (brute) {
        ++report.infeasible;
      } else {
        ++report.feasible;
      }

      const auto result = construct_tree(g, f);
      if (is_feasible(result) == brute.has_value()) ++report.constructor_mismatches;
      if (const auto* cert = std::get_if<TreeCertificate>(&result)) {
        if (!verify_certificate(g, f, *cert)) ++report.bad_certificates;
      } else if (!violates_condition(g, f, std::get<HallViolation>(result).subset)) {
        ++report.bad_violations;
      }
    } catch (const InternalError&) {
      ++report.internal_errors;
    }
  }
  return report;
}

ConstructorSweepReport constructor_sweep(std::size_t m, std::size_t n, int k, std::size_t jobs) {
  require_enumerable(m, n);
  const auto demand = DegreeDemand::uniform(m, k);
  const auto total = BipartiteEnumerator::universe_size(m, n);
  auto chunks = run_chunked<ConstructorSweepReport>(total, 256, jobs, [&](std::size_t, std::uint64_t lo,
                                                                          std::uint64_t hi) {
    ConstructorSweepReport out;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      if (!mask_connected(m, n, mask)) continue;
      ++out.graphs;
      const auto g = graph_from_mask(m, n, mask);
      try {
        const auto brute = check_condition_bruteforce(g, demand);
        const auto result = construct_tree(g, demand);
        if (is_feasible(result) == brute.has_value()) ++out.mismatches;
        if (const auto* cert = std::get_if<TreeCertificate>(&result)) {
          ++out.feasible;
          if (!verify_certificate(g, demand, *cert)) ++out.bad_certificates;
        }
      } catch (const InternalError&) {
        ++out.internal_errors;
      }
    }
    return out;
  });

  ConstructorSweepReport report;
  report.m = m;
  report.n = n;
  report.k = k;
  for (const auto& c : chunks) {
    report.graphs += c.graphs;
    report.feasible += c.feasible;
    report.mismatches += c.mismatches;
    report.bad_certificates += c.bad_certificates;
    report.internal_errors += c.internal_errors;
  }
  return report;
}

}  // namespace bispan

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "bispan/bipartite_graph.hpp"
#include "bispan/degree_demand.hpp"

namespace bispan {

/// Spanning tree of G with d_T(v) >= f(v) on A.
struct TreeCertificate {
  std::vector<Edge> edges;
};

/// Nonempty S subset of A with |N(S)| <= sum_{v in S} f(v) - |S|, which rules
/// out every qualifying spanning tree. Indices ascending.
struct HallViolation {
  std::vector<std::size_t> subset;
};

using FeasibilityResult = std::variant<TreeCertificate, HallViolation>;

inline bool is_feasible(const FeasibilityResult& r) {
  return std::holds_alternative<TreeCertificate>(r);
}

inline constexpr std::size_t kBruteForceLeftCap = 25;

/// True iff `subset` is nonempty and |N(S)| <= sum f(v) - |S|.
bool violates_condition(const BipartiteGraph& g, const DegreeDemand& f,
                        std::span<const std::size_t> subset);

/// Tries every nonempty S subset of A, smallest first and lexicographically
/// within a size, so the returned violation is canonical. m is capped at
/// kBruteForceLeftCap (CapacityError).
std::optional<HallViolation> check_condition_bruteforce(const BipartiteGraph& g,
                                                        const DegreeDemand& f);

/// Same predicate in polynomial time. For each anchor a in A a max flow on
///
///   source -> v   capacity f(v) - 1   (v != a)
///   source -> a   capacity M
///   v -> u        capacity M          (each edge, v in A, u in B)
///   u -> sink     capacity 1
///
/// with M = sum(f(v) - 1) + n + 1 reaches sum(f(v) - 1) + 1 iff no violating
/// set contains a. Otherwise the A-vertices on the source side of the min
/// cut form one, which is re-checked before it is returned.
std::optional<HallViolation> check_condition_flow(const BipartiteGraph& g, const DegreeDemand& f);

/// Phase of construct_tree that produced the answer.
enum class ConstructPhase {
  hall_violation,
  bfs_tree,
  local_swaps,
  swap_sequences,
  exhaustive,
};

std::string_view to_string(ConstructPhase phase);

struct ConstructOptions {
  /// Single edge swaps on the BFS tree before the sequence search.
  bool local_search = true;
  /// Maximum swaps per exchange sequence; unset means m + n, zero skips
  /// the sequence search.
  std::optional<std::size_t> swap_depth;
  /// Exhaustive spanning-tree enumeration runs only up to this many edges.
  std::size_t exhaustive_edge_cap = 24;
};

struct ConstructStats {
  ConstructPhase phase = ConstructPhase::bfs_tree;
  std::size_t single_swaps = 0;
  std::size_t sequences = 0;
};

/// Decides the degree-constrained spanning tree problem and returns a
/// checked witness either way.
///
/// Runs check_condition_flow first. When the condition holds it starts from
/// a BFS tree, lowers the total deficiency sum max(0, f(v) - d_T(v)) with
/// single swaps along fundamental cycles, then with swap sequences found
/// breadth-first in the exchange graph of the forest and per-vertex
/// capacity matroids, and as a last resort enumerates spanning trees of
/// small graphs. A stall after the checker reported feasibility throws
/// InternalError.
///
/// Throws InputError if g is disconnected or f has the wrong length.
FeasibilityResult construct_tree(const BipartiteGraph& g, const DegreeDemand& f,
                                 const ConstructOptions& options = {},
                                 ConstructStats* stats = nullptr);

/// True iff the edges lie in G, number m + n - 1, connect every vertex and
/// give each A-vertex tree degree at least f(v).
bool verify_certificate(const BipartiteGraph& g, const DegreeDemand& f, const TreeCertificate& t);

}  // namespace bispan

#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "bispan/vertex_set.hpp"

namespace bispan {

/// A cross edge (a, b) with a indexing side A and b indexing side B.
struct Edge {
  std::size_t a = 0;
  std::size_t b = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple bipartite graph with sides A = {0..m-1} and B = {0..n-1}.
///
/// Both sides are indexed from zero independently. When a single vertex
/// numbering is needed (matrices, partitions) A comes first: vertex a is
/// `a` and vertex b is `m + b`.
///
/// Values are immutable once built and safe to share between threads.
class BipartiteGraph {
 public:
  /// Builds from an edge list. Duplicates collapse; indices must be in
  /// range and both sides nonempty.
  static BipartiteGraph from_edge_list(std::size_t m, std::size_t n,
                                       std::span<const Edge> edges);

  /// Edgeless graph. Unlike from_edge_list either side may be empty, which
  /// is what join needs for degenerate operands.
  static BipartiteGraph edgeless(std::size_t m, std::size_t n);

  std::size_t left_size() const noexcept { return left_.size(); }
  std::size_t right_size() const noexcept { return right_.size(); }
  std::size_t vertex_count() const noexcept { return left_.size() + right_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  /// N(a) as a subset of B.
  const VertexSet& left_neighbors(std::size_t a) const { return left_[a]; }
  /// N(b) as a subset of A.
  const VertexSet& right_neighbors(std::size_t b) const { return right_[b]; }

  std::size_t left_degree(std::size_t a) const { return left_[a].size(); }
  std::size_t right_degree(std::size_t b) const { return right_[b].size(); }

  bool has_edge(std::size_t a, std::size_t b) const {
    return a < left_.size() && left_[a].contains(b);
  }

  /// Edges in lexicographic (a, b) order.
  std::vector<Edge> edges() const;

  friend bool operator==(const BipartiteGraph& lhs, const BipartiteGraph& rhs) {
    return lhs.right_.size() == rhs.right_.size() && lhs.left_ == rhs.left_;
  }

 private:
  BipartiteGraph(std::size_t m, std::size_t n);
  void add_edge(std::size_t a, std::size_t b);

  std::vector<VertexSet> left_;
  std::vector<VertexSet> right_;
  std::size_t edge_count_ = 0;

  friend BipartiteGraph join(const BipartiteGraph&, const BipartiteGraph&);
};

/// K_{m,n}.
BipartiteGraph complete_bipartite(std::size_t m, std::size_t n);

/// Bipartite join: disjoint union of g1 and g2 plus every edge between A2
/// and B1. Indices of g1 come first on both sides.
BipartiteGraph join(const BipartiteGraph& g1, const BipartiteGraph& g2);

/// N(S) for S a subset of A; empty S gives the empty set.
VertexSet neighbors_of_set(const BipartiteGraph& g, const VertexSet& subset);
VertexSet neighbors_of_set(const BipartiteGraph& g, std::span<const std::size_t> subset);

/// True iff a breadth-first search from A-vertex 0 reaches all m + n vertices.
bool is_connected(const BipartiteGraph& g);

/// True iff some pair of permutations (one of A, one of B) carries the edge
/// set of g onto that of h. Brute force over A-permutations, so only meant
/// for small sides (m <= 8).
bool part_preserving_isomorphic(const BipartiteGraph& g, const BipartiteGraph& h);

}  // namespace bispan

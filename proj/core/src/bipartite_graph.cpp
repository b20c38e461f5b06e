#include "bispan/bipartite_graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bispan/errors.hpp"

namespace bispan {

namespace {

constexpr std::size_t kIsomorphismLeftCap = 8;

// B-vertex neighborhoods as A-masks, sorted, after relabeling A by `perm`.
std::vector<std::uint64_t> relabeled_signature(const BipartiteGraph& g,
                                               const std::vector<std::size_t>& perm) {
  std::vector<std::uint64_t> sig;
  sig.reserve(g.right_size());
  for (std::size_t b = 0; b < g.right_size(); ++b) {
    std::uint64_t mask = 0;
    g.right_neighbors(b).for_each([&](std::size_t a) { mask |= std::uint64_t{1} << perm[a]; });
    sig.push_back(mask);
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

std::vector<std::size_t> sorted_left_degrees(const BipartiteGraph& g) {
  std::vector<std::size_t> d(g.left_size());
  for (std::size_t a = 0; a < g.left_size(); ++a) d[a] = g.left_degree(a);
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<std::size_t> sorted_right_degrees(const BipartiteGraph& g) {
  std::vector<std::size_t> d(g.right_size());
  for (std::size_t b = 0; b < g.right_size(); ++b) d[b] = g.right_degree(b);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

BipartiteGraph::BipartiteGraph(std::size_t m, std::size_t n)
    : left_(m, VertexSet(n)), right_(n, VertexSet(m)) {}

void BipartiteGraph::add_edge(std::size_t a, std::size_t b) {
  if (left_[a].contains(b)) return;
  left_[a].insert(b);
  right_[b].insert(a);
  ++edge_count_;
}

BipartiteGraph BipartiteGraph::from_edge_list(std::size_t m, std::size_t n,
                                              std::span<const Edge> edges) {
  if (m == 0 || n == 0) throw InputError("bipartite graph needs both sides nonempty");
  BipartiteGraph g(m, n);
  for (const auto& e : edges) {
    if (e.a >= m || e.b >= n) {
      throw InputError("edge (" + std::to_string(e.a) + ", " + std::to_string(e.b) +
                       ") out of range for sides " + std::to_string(m) + " x " +
                       std::to_string(n));
    }
    g.add_edge(e.a, e.b);
  }
  return g;
}

BipartiteGraph BipartiteGraph::edgeless(std::size_t m, std::size_t n) {
  return BipartiteGraph(m, n);
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t a = 0; a < left_.size(); ++a)
    left_[a].for_each([&](std::size_t b) { out.push_back({a, b}); });
  return out;
}

BipartiteGraph complete_bipartite(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw InputError("complete_bipartite needs both sides nonempty");
  std::vector<Edge> edges;
  edges.reserve(m * n);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < n; ++b) edges.push_back({a, b});
  return BipartiteGraph::from_edge_list(m, n, edges);
}

BipartiteGraph join(const BipartiteGraph& g1, const BipartiteGraph& g2) {
  const auto m1 = g1.left_size();
  const auto n1 = g1.right_size();
  BipartiteGraph out(m1 + g2.left_size(), n1 + g2.right_size());
  for (const auto& e : g1.edges()) out.add_edge(e.a, e.b);
  for (const auto& e : g2.edges()) out.add_edge(m1 + e.a, n1 + e.b);
  for (std::size_t a = 0; a < g2.left_size(); ++a)
    for (std::size_t b = 0; b < n1; ++b) out.add_edge(m1 + a, b);
  return out;
}

VertexSet neighbors_of_set(const BipartiteGraph& g, const VertexSet& subset) {
  VertexSet out(g.right_size());
  subset.for_each([&](std::size_t a) { out |= g.left_neighbors(a); });
  return out;
}

VertexSet neighbors_of_set(const BipartiteGraph& g, std::span<const std::size_t> subset) {
  VertexSet out(g.right_size());
  for (auto a : subset) {
    if (a >= g.left_size()) throw InputError("subset index outside A");
    out |= g.left_neighbors(a);
  }
  return out;
}

bool is_connected(const BipartiteGraph& g) {
  const auto m = g.left_size();
  const auto n = g.right_size();
  if (m == 0) return n == 0 ? false : n == 1;
  VertexSet seen_left(m);
  VertexSet seen_right(n);
  std::vector<std::size_t> frontier{0};
  seen_left.insert(0);
  while (!frontier.empty()) {
    VertexSet reached(n);
    for (auto a : frontier) reached |= g.left_neighbors(a);
    frontier.clear();
    reached.for_each([&](std::size_t b) {
      if (seen_right.contains(b)) return;
      seen_right.insert(b);
      g.right_neighbors(b).for_each([&](std::size_t a) {
        if (!seen_left.contains(a)) {
          seen_left.insert(a);
          frontier.push_back(a);
        }
      });
    });
  }
  return seen_left.size() == m && seen_right.size() == n;
}

bool part_preserving_isomorphic(const BipartiteGraph& g, const BipartiteGraph& h) {
  if (g.left_size() != h.left_size() || g.right_size() != h.right_size())
    throw InputError("isomorphism test needs equal side sizes");
  const auto m = g.left_size();
  if (m > kIsomorphismLeftCap)
    throw CapacityError("isomorphism test limited to " + std::to_string(kIsomorphismLeftCap) +
                        " A-vertices");
  if (g.edge_count() != h.edge_count()) return false;
  if (sorted_left_degrees(g) != sorted_left_degrees(h)) return false;
  if (sorted_right_degrees(g) != sorted_right_degrees(h)) return false;

  std::vector<std::size_t> identity(m);
  std::iota(identity.begin(), identity.end(), 0);
  const auto target = relabeled_signature(h, identity);

  // Once A is relabeled, B can be matched freely, so comparing the sorted
  // multisets of B-neighborhoods decides the remaining freedom exactly.
  std::vector<std::size_t> perm = identity;
  do {
    bool degrees_match = true;
    for (std::size_t a = 0; a < m && degrees_match; ++a)
      degrees_match = g.left_degree(a) == h.left_degree(perm[a]);
    if (degrees_match && relabeled_signature(g, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace bispan

#include "bispan/trees.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

#include "bispan/errors.hpp"

namespace bispan {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (rank_[x] < rank_[y]) std::swap(x, y);
    history_.push_back({y, rank_[x] == rank_[y]});
    parent_[y] = x;
    if (rank_[x] == rank_[y]) ++rank_[x];
    return true;
  }

  std::size_t checkpoint() const noexcept { return history_.size(); }

  void rollback(std::size_t to) {
    while (history_.size() > to) {
      const auto [child, bumped] = history_.back();
      history_.pop_back();
      const auto root = parent_[child];
      if (bumped) --rank_[root];
      parent_[child] = child;
    }
  }

 private:
  struct Change {
    std::size_t child;
    bool bumped;
  };
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
  std::vector<Change> history_;
};

// Edmonds-Karp on a small network.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : adj_(nodes) {}

  void add_arc(std::size_t from, std::size_t to, long cap) {
    adj_[from].push_back(arcs_.size());
    arcs_.push_back({to, cap});
    adj_[to].push_back(arcs_.size());
    arcs_.push_back({from, 0});
  }

  long max_flow(std::size_t source, std::size_t sink, long stop_at) {
    long flow = 0;
    std::vector<std::size_t> via(adj_.size());
    constexpr auto kNone = std::numeric_limits<std::size_t>::max();
    while (flow < stop_at) {
      std::fill(via.begin(), via.end(), kNone);
      std::deque<std::size_t> queue{source};
      via[source] = kNone - 1;
      while (!queue.empty() && via[sink] == kNone) {
        const auto u = queue.front();
        queue.pop_front();
        for (auto id : adj_[u]) {
          const auto& arc = arcs_[id];
          if (arc.cap > 0 && via[arc.to] == kNone) {
            via[arc.to] = id;
            queue.push_back(arc.to);
          }
        }
      }
      if (via[sink] == kNone) break;
      long push = stop_at - flow;
      for (auto v = sink; v != source; v = arcs_[via[v] ^ 1].to) push = std::min(push, arcs_[via[v]].cap);
      for (auto v = sink; v != source; v = arcs_[via[v] ^ 1].to) {
        arcs_[via[v]].cap -= push;
        arcs_[via[v] ^ 1].cap += push;
      }
      flow += push;
    }
    return flow;
  }

  std::vector<bool> residual_reachable(std::size_t source) const {
    std::vector<bool> seen(adj_.size(), false);
    std::vector<std::size_t> stack{source};
    seen[source] = true;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (auto id : adj_[u]) {
        const auto& arc = arcs_[id];
        if (arc.cap > 0 && !seen[arc.to]) {
          seen[arc.to] = true;
          stack.push_back(arc.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    std::size_t to;
    long cap;
  };
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Arc> arcs_;
};

void require_matching_demand(const BipartiteGraph& g, const DegreeDemand& f) {
  if (f.size() != g.left_size())
    throw InputError("demand has " + std::to_string(f.size()) + " entries but A has " +
                     std::to_string(g.left_size()) + " vertices");
}

// Working state for the constructive search. Vertices use the combined
// numbering; every edge's A-endpoint is edges[e].a.
class TreeSearch {
 public:
  TreeSearch(const BipartiteGraph& g, const DegreeDemand& f)
      : f_(f), m_(g.left_size()), total_(g.vertex_count()), edges_(g.edges()),
        incident_(total_) {
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      incident_[edges_[e].a].push_back(e);
      incident_[m_ + edges_[e].b].push_back(e);
    }
  }

  std::size_t other_end(std::size_t e, std::size_t v) const {
    return v < m_ ? m_ + edges_[e].b : edges_[e].a;
  }

  std::vector<bool> bfs_tree() const {
    std::vector<bool> in_tree(edges_.size(), false);
    std::vector<bool> seen(total_, false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop_front();
      for (auto e : incident_[v]) {
        const auto w = other_end(e, v);
        if (!seen[w]) {
          seen[w] = true;
          in_tree[e] = true;
          queue.push_back(w);
        }
      }
    }
    return in_tree;
  }

  std::vector<long> left_degrees(const std::vector<bool>& chosen) const {
    std::vector<long> d(m_, 0);
    for (std::size_t e = 0; e < edges_.size(); ++e)
      if (chosen[e]) ++d[edges_[e].a];
    return d;
  }

  long deficiency(const std::vector<long>& d) const {
    long total = 0;
    for (std::size_t a = 0; a < m_; ++a) total += std::max(0L, f_[a] - d[a]);
    return total;
  }

  // Edge ids on the path from `from` to `to` inside the forest `chosen`;
  // empty if they lie in different components.
  std::vector<std::size_t> forest_path(const std::vector<bool>& chosen, std::size_t from,
                                       std::size_t to) const {
    constexpr auto kNone = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> via(total_, kNone);
    std::vector<bool> seen(total_, false);
    std::deque<std::size_t> queue{from};
    seen[from] = true;
    while (!queue.empty() && !seen[to]) {
      const auto v = queue.front();
      queue.pop_front();
      for (auto e : incident_[v]) {
        if (!chosen[e]) continue;
        const auto w = other_end(e, v);
        if (!seen[w]) {
          seen[w] = true;
          via[w] = e;
          queue.push_back(w);
        }
      }
    }
    std::vector<std::size_t> path;
    if (!seen[to]) return path;
    for (auto v = to; v != from;) {
      const auto e = via[v];
      path.push_back(e);
      v = other_end(e, v);
    }
    return path;
  }

  // Single swaps: add a non-tree edge at a deficient v and drop a tree edge
  // on its fundamental cycle whose A-endpoint has surplus.
  std::size_t local_swaps(std::vector<bool>& in_tree) const {
    auto d = left_degrees(in_tree);
    std::size_t swaps = 0;
    bool improved = true;
    while (improved && deficiency(d) > 0) {
      improved = false;
      for (std::size_t v = 0; v < m_ && !improved; ++v) {
        if (d[v] >= f_[v]) continue;
        for (auto e : incident_[v]) {
          if (in_tree[e]) continue;
          for (auto x : forest_path(in_tree, v, m_ + edges_[e].b)) {
            const auto owner = edges_[x].a;
            if (owner != v && d[owner] >= f_[owner] + 1) {
              in_tree[x] = false;
              in_tree[e] = true;
              --d[owner];
              ++d[v];
              ++swaps;
              improved = true;
              break;
            }
          }
          if (improved) break;
        }
      }
    }
    return swaps;
  }

  // Keeps at most f(v) tree edges at each A-vertex; the result is a common
  // independent set of the graphic matroid and the capacity matroid.
  std::vector<bool> trim_to_demand(const std::vector<bool>& in_tree) const {
    std::vector<bool> kept(edges_.size(), false);
    std::vector<long> used(m_, 0);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (!in_tree[e]) continue;
      const auto a = edges_[e].a;
      if (used[a] < f_[a]) {
        kept[e] = true;
        ++used[a];
      }
    }
    return kept;
  }

  // One shortest augmenting path in the exchange graph. Returns false when
  // none exists within `depth` swaps.
  bool augment(std::vector<bool>& forest, std::size_t depth) const {
    const auto used = left_degrees(forest);
    DisjointSets comps(total_);
    for (std::size_t e = 0; e < edges_.size(); ++e)
      if (forest[e]) comps.unite(edges_[e].a, m_ + edges_[e].b);

    const auto count = edges_.size();
    std::vector<bool> grows(count, false);    // forest + z is still a forest
    std::vector<bool> has_room(count, false);  // owner of z below its demand
    for (std::size_t z = 0; z < count; ++z) {
      if (forest[z]) continue;
      grows[z] = comps.find(edges_[z].a) != comps.find(m_ + edges_[z].b);
      has_room[z] = used[edges_[z].a] < f_[edges_[z].a];
      if (grows[z] && has_room[z]) {
        forest[z] = true;
        return true;
      }
    }
    if (depth == 0) return false;

    // Arcs y -> z (y in forest): z closes a cycle through y.
    std::vector<std::vector<std::size_t>> cycle_arcs(count);
    for (std::size_t z = 0; z < count; ++z) {
      if (forest[z] || grows[z]) continue;
      for (auto y : forest_path(forest, edges_[z].a, m_ + edges_[z].b)) cycle_arcs[y].push_back(z);
    }

    constexpr auto kNone = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> prev(count, kNone);
    std::vector<std::size_t> swaps(count, 0);
    std::vector<bool> seen(count, false);
    std::deque<std::size_t> queue;
    for (std::size_t z = 0; z < count; ++z) {
      if (!forest[z] && grows[z]) {
        seen[z] = true;
        queue.push_back(z);
      }
    }
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      if (!forest[u]) {
        if (has_room[u]) {
          for (auto v = u; v != kNone; v = prev[v]) forest[v] = !forest[v];
          return true;
        }
        if (swaps[u] >= depth) continue;
        // Arcs z -> y (y in forest): swapping keeps the owner within demand.
        for (auto y : incident_[edges_[u].a]) {
          if (forest[y] && !seen[y]) {
            seen[y] = true;
            prev[y] = u;
            swaps[y] = swaps[u] + 1;
            queue.push_back(y);
          }
        }
      } else {
        for (auto z : cycle_arcs[u]) {
          if (!seen[z]) {
            seen[z] = true;
            prev[z] = u;
            swaps[z] = swaps[u];
            queue.push_back(z);
          }
        }
      }
    }
    return false;
  }

  // Adds edges of G until the forest spans.
  std::vector<bool> extend_to_spanning(std::vector<bool> forest) const {
    DisjointSets comps(total_);
    for (std::size_t e = 0; e < edges_.size(); ++e)
      if (forest[e]) comps.unite(edges_[e].a, m_ + edges_[e].b);
    for (std::size_t e = 0; e < edges_.size(); ++e)
      if (!forest[e] && comps.unite(edges_[e].a, m_ + edges_[e].b)) forest[e] = true;
    return forest;
  }

  std::optional<std::vector<bool>> exhaustive() const {
    std::vector<bool> chosen(edges_.size(), false);
    std::vector<long> d(m_, 0);
    std::vector<long> remaining(m_, 0);
    for (const auto& e : edges_) ++remaining[e.a];
    DisjointSets comps(total_);
    const std::size_t needed = total_ - 1;
    std::size_t picked = 0;

    auto recurse = [&](auto&& self, std::size_t e) -> bool {
      if (picked == needed) {
        for (std::size_t a = 0; a < m_; ++a)
          if (d[a] < f_[a]) return false;
        return true;
      }
      if (e == edges_.size() || edges_.size() - e < needed - picked) return false;
      const auto a = edges_[e].a;
      const auto mark = comps.checkpoint();
      --remaining[a];
      if (comps.unite(a, m_ + edges_[e].b)) {
        chosen[e] = true;
        ++d[a];
        ++picked;
        if (self(self, e + 1)) return true;
        --picked;
        --d[a];
        chosen[e] = false;
        comps.rollback(mark);
      }
      if (d[a] + remaining[a] >= f_[a] && self(self, e + 1)) return true;
      ++remaining[a];
      return false;
    };
    if (recurse(recurse, 0)) return chosen;
    return std::nullopt;
  }

  TreeCertificate certificate(const std::vector<bool>& chosen) const {
    TreeCertificate t;
    for (std::size_t e = 0; e < edges_.size(); ++e)
      if (chosen[e]) t.edges.push_back(edges_[e]);
    return t;
  }

  std::size_t edge_count() const noexcept { return edges_.size(); }

 private:
  const DegreeDemand& f_;
  std::size_t m_;
  std::size_t total_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

HallViolation checked_violation(const BipartiteGraph& g, const DegreeDemand& f,
                                std::vector<std::size_t> subset, const char* source) {
  if (!violates_condition(g, f, subset))
    throw InternalError(std::string(source) + " produced a set that does not violate the condition");
  return HallViolation{std::move(subset)};
}

}  // namespace

bool violates_condition(const BipartiteGraph& g, const DegreeDemand& f,
                        std::span<const std::size_t> subset) {
  require_matching_demand(g, f);
  if (subset.empty()) return false;
  long demand = 0;
  for (auto a : subset) demand += f[a] - 1;
  return static_cast<long>(neighbors_of_set(g, subset).size()) <= demand;
}

std::optional<HallViolation> check_condition_bruteforce(const BipartiteGraph& g,
                                                        const DegreeDemand& f) {
  require_matching_demand(g, f);
  const auto m = g.left_size();
  if (m > kBruteForceLeftCap)
    throw CapacityError("brute-force check limited to m <= " + std::to_string(kBruteForceLeftCap));

  std::vector<std::size_t> chosen;
  std::vector<VertexSet> unions;
  chosen.reserve(m);
  unions.reserve(m + 1);
  for (std::size_t size = 1; size <= m; ++size) {
    chosen.clear();
    unions.assign(1, VertexSet(g.right_size()));
    // Lexicographic combinations of `size` elements; unions[i] = N(chosen[0..i)).
    auto search = [&](auto&& self, std::size_t start, long slack) -> bool {
      if (chosen.size() == size) return static_cast<long>(unions.back().size()) <= slack;
      for (std::size_t a = start; a + (size - chosen.size()) <= m; ++a) {
        chosen.push_back(a);
        unions.push_back(unions.back() | g.left_neighbors(a));
        if (self(self, a + 1, slack + f[a] - 1)) return true;
        unions.pop_back();
        chosen.pop_back();
      }
      return false;
    };
    if (search(search, 0, 0)) return checked_violation(g, f, chosen, "brute-force checker");
  }
  return std::nullopt;
}

std::optional<HallViolation> check_condition_flow(const BipartiteGraph& g, const DegreeDemand& f) {
  require_matching_demand(g, f);
  const auto m = g.left_size();
  const auto n = g.right_size();
  long excess = 0;
  for (std::size_t a = 0; a < m; ++a) excess += f[a] - 1;
  const long big = excess + static_cast<long>(n) + 1;
  const long target = excess + 1;

  const std::size_t source = 0;
  const std::size_t sink = m + n + 1;
  for (std::size_t anchor = 0; anchor < m; ++anchor) {
    FlowNetwork net(m + n + 2);
    for (std::size_t a = 0; a < m; ++a) {
      net.add_arc(source, 1 + a, a == anchor ? big : f[a] - 1);
      g.left_neighbors(a).for_each([&](std::size_t b) { net.add_arc(1 + a, 1 + m + b, big); });
    }
    for (std::size_t b = 0; b < n; ++b) net.add_arc(1 + m + b, sink, 1);
    if (net.max_flow(source, sink, target) >= target) continue;

    const auto side = net.residual_reachable(source);
    std::vector<std::size_t> subset;
    for (std::size_t a = 0; a < m; ++a)
      if (side[1 + a]) subset.push_back(a);
    return checked_violation(g, f, std::move(subset), "flow checker");
  }
  return std::nullopt;
}

std::string_view to_string(ConstructPhase phase) {
  switch (phase) {
    case ConstructPhase::hall_violation:
      return "hall_violation";
    case ConstructPhase::bfs_tree:
      return "bfs_tree";
    case ConstructPhase::local_swaps:
      return "local_swaps";
    case ConstructPhase::swap_sequences:
      return "swap_sequences";
    case ConstructPhase::exhaustive:
      return "exhaustive";
  }
  return "unknown";
}

FeasibilityResult construct_tree(const BipartiteGraph& g, const DegreeDemand& f,
                                 const ConstructOptions& options, ConstructStats* stats) {
  require_matching_demand(g, f);
  if (!is_connected(g)) throw InputError("construct_tree needs a connected graph");
  ConstructStats local;
  ConstructStats& st = stats != nullptr ? *stats : local;
  st = {};

  const auto tree_edges = static_cast<long>(g.vertex_count()) - 1;
  auto violation = check_condition_flow(g, f);
  if (f.total() > tree_edges && !violation)
    throw InternalError("demand exceeds tree size but the flow checker found no violation");
  if (violation) {
    st.phase = ConstructPhase::hall_violation;
    return *std::move(violation);
  }

  auto finish = [&](const std::vector<bool>& chosen, const TreeSearch& search,
                    ConstructPhase phase) -> FeasibilityResult {
    auto cert = search.certificate(chosen);
    if (!verify_certificate(g, f, cert))
      throw InternalError("constructed tree failed its certificate check");
    st.phase = phase;
    return cert;
  };

  const TreeSearch search(g, f);
  auto tree = search.bfs_tree();
  if (search.deficiency(search.left_degrees(tree)) == 0)
    return finish(tree, search, ConstructPhase::bfs_tree);

  if (options.local_search) {
    st.single_swaps = search.local_swaps(tree);
    if (search.deficiency(search.left_degrees(tree)) == 0)
      return finish(tree, search, ConstructPhase::local_swaps);
  }

  const auto depth = options.swap_depth.value_or(g.vertex_count());
  if (depth > 0) {
    auto forest = search.trim_to_demand(tree);
    while (search.deficiency(search.left_degrees(forest)) > 0 && search.augment(forest, depth))
      ++st.sequences;
    if (search.deficiency(search.left_degrees(forest)) == 0)
      return finish(search.extend_to_spanning(forest), search, ConstructPhase::swap_sequences);
  }

  if (search.edge_count() <= options.exhaustive_edge_cap) {
    if (auto found = search.exhaustive()) return finish(*found, search, ConstructPhase::exhaustive);
  }
  throw InternalError("tree search stalled although the condition holds");
}

bool verify_certificate(const BipartiteGraph& g, const DegreeDemand& f, const TreeCertificate& t) {
  if (f.size() != g.left_size()) return false;
  const auto m = g.left_size();
  if (t.edges.size() + 1 != g.vertex_count()) return false;
  DisjointSets comps(g.vertex_count());
  std::vector<long> d(m, 0);
  for (const auto& e : t.edges) {
    if (!g.has_edge(e.a, e.b)) return false;
    if (!comps.unite(e.a, m + e.b)) return false;
    ++d[e.a];
  }
  for (std::size_t a = 0; a < m; ++a)
    if (d[a] < f[a]) return false;
  return true;
}

}  // namespace bispan

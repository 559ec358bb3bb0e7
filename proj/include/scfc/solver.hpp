#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "scfc/coloring.hpp"
#include "scfc/graph.hpp"

namespace scfc {

// ---------------------------------------------------------------------------
// Structural lower-bound conditions. Each returns true when the graph has the
// corresponding structure; any of them forces at least three colors.

// A vertex whose deletion leaves at least three components.
inline bool condition_cutvertex(const Graph& g) {
  for (Vertex w = 0; w < g.order(); ++w) {
    if (g.degree(w) >= 3 && cut_vertex_components(g, w) >= 3) return true;
  }
  return false;
}

// Longest path made only of bridges, i.e. the diameter of the bridge forest.
inline int longest_bridge_path(const Graph& g) {
  const auto br = bridges(g);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (EdgeId e : br) pairs.emplace_back(g.edge(e).u, g.edge(e).v);
  const Graph forest = build_graph(g.order(), std::move(pairs));
  int best = 0;
  for (Vertex v = 0; v < forest.order(); ++v) {
    if (forest.degree(v) != 1) continue;
    for (int d : bfs_distances(forest, v)) {
      if (d != kUnreachable) best = std::max(best, d);
    }
  }
  return best;
}

// A path of length >= 4 all of whose edges are bridges. Its ends are then at
// distance >= 4, since every path between them crosses each bridge.
inline bool condition_bridgepath(const Graph& g) { return longest_bridge_path(g) >= 4; }

namespace detail {

inline bool bundle_condition(const Graph& g, const std::function<bool(const PathBundle&)>& pred) {
  std::optional<DistanceMatrix> dist;
  for (const auto& b : parallel_path_bundles(g)) {
    if (!pred(b)) continue;
    if (!dist) dist = all_pairs_distances(g);
    if ((*dist)[b.u][b.v] >= 2) return true;
  }
  return false;
}

}  // namespace detail

// Two parallel u-v paths of lengths 2 and 3 with d(u, v) >= 2.
inline bool condition_parallel_2_3(const Graph& g) {
  return detail::bundle_condition(g, [](const PathBundle& b) {
    const bool two = std::find(b.lengths.begin(), b.lengths.end(), 2) != b.lengths.end();
    const bool three = std::find(b.lengths.begin(), b.lengths.end(), 3) != b.lengths.end();
    return two && three;
  });
}

// Five parallel u-v paths with d(u, v) >= 2.
inline bool condition_parallel_5(const Graph& g) {
  return detail::bundle_condition(g, [](const PathBundle& b) { return b.lengths.size() >= 5; });
}

inline bool any_structural_condition(const Graph& g) {
  return condition_cutvertex(g) || condition_bridgepath(g) || condition_parallel_2_3(g) || condition_parallel_5(g);
}

// ---------------------------------------------------------------------------
// Triangle packing

struct Triangle {
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;
  friend constexpr auto operator<=>(const Triangle&, const Triangle&) = default;
};

struct TrianglePacking {
  std::vector<Triangle> triangles;
  int size() const noexcept { return static_cast<int>(triangles.size()); }
};

inline std::vector<Triangle> triangles_of(const Graph& g) {
  std::vector<Triangle> out;
  for (const auto& e : g.edges()) {
    for (Vertex w : g.neighbors(e.v)) {
      if (w > e.v && g.has_edge(e.u, w)) out.push_back({e.u, e.v, w});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::array<EdgeId, 3> triangle_edges(const Graph& g, const Triangle& t) {
  auto ab = g.edge_id(t.a, t.b);
  auto bc = g.edge_id(t.b, t.c);
  auto ac = g.edge_id(t.a, t.c);
  if (!ab || !bc || !ac) throw Error(ErrorKind::NotATriangle, "vertices do not span a triangle");
  return {*ab, *bc, *ac};
}

// Maximum edge-disjoint triangle packing by branch and bound over the
// triangle list; a branch is cut when even taking every remaining triangle
// (or one per three free edges) cannot beat the incumbent.
inline TrianglePacking max_edge_disjoint_triangles(const Graph& g) {
  const auto tris = triangles_of(g);
  std::vector<std::array<EdgeId, 3>> tri_edges;
  for (const auto& t : tris) tri_edges.push_back(triangle_edges(g, t));
  std::vector<char> used(g.size(), 0);
  std::vector<int> current;
  std::vector<int> best;
  int free_edges = g.size();

  auto go = [&](auto&& self, std::size_t i) -> void {
    if (current.size() > best.size()) best = current;
    if (i == tris.size()) return;
    const std::size_t remaining = tris.size() - i;
    const std::size_t room = static_cast<std::size_t>(free_edges) / 3;
    if (current.size() + std::min(remaining, room) <= best.size()) return;
    const auto& te = tri_edges[i];
    if (!used[te[0].index] && !used[te[1].index] && !used[te[2].index]) {
      for (EdgeId e : te) used[e.index] = 1;
      free_edges -= 3;
      current.push_back(static_cast<int>(i));
      self(self, i + 1);
      current.pop_back();
      free_edges += 3;
      for (EdgeId e : te) used[e.index] = 0;
    }
    self(self, i + 1);
  };
  go(go, 0);
  TrianglePacking packing;
  for (int i : best) packing.triangles.push_back(tris[i]);
  return packing;
}

// ---------------------------------------------------------------------------
// Bounds

enum class BoundReason {
  Base,
  NonComplete,
  Structural3,
  TreeBound,
  TrivialRainbow,
  TrianglePacking,
  CycleBound,
};

constexpr std::string_view to_string(BoundReason r) {
  switch (r) {
    case BoundReason::Base: return "Base";
    case BoundReason::NonComplete: return "NonComplete";
    case BoundReason::Structural3: return "Structural3";
    case BoundReason::TreeBound: return "TreeBound";
    case BoundReason::TrivialRainbow: return "TrivialRainbow";
    case BoundReason::TrianglePacking: return "TrianglePacking";
    case BoundReason::CycleBound: return "CycleBound";
  }
  return "Unknown";
}

struct Bound {
  int value = 0;
  BoundReason reason = BoundReason::Base;
};

struct BoundTrace {
  Bound lower;
  Bound upper;
  // Set when a color count below `lower` turned out to be feasible.
  bool lower_bound_violated = false;
};

inline int ceil_log2(int x) {
  int r = 0;
  while ((1 << r) < x) ++r;
  return r;
}

inline Bound lower_bound(const Graph& g) {
  Bound b{1, BoundReason::Base};
  if (!g.is_complete()) b = {2, BoundReason::NonComplete};
  if (any_structural_condition(g)) b = {3, BoundReason::Structural3};
  if (g.is_tree() && g.size() > 0) {
    const int tree = std::max(ceil_log2(diameter(g) + 1), g.max_degree());
    if (tree > b.value) b = {tree, BoundReason::TreeBound};
  }
  return b;
}

// Longest simple cycle found by DFS within a step budget (0 if acyclic).
inline int longest_cycle_found(const Graph& g, std::uint64_t step_budget = 200000) {
  const int n = g.order();
  int best = 0;
  std::uint64_t steps = 0;
  std::vector<char> on(n, 0);
  auto dfs = [&](auto&& self, Vertex start, Vertex v, int len) -> void {
    if (++steps > step_budget || best == n) return;
    for (Vertex w : g.neighbors(v)) {
      if (w == start && len >= 3) best = std::max(best, len);
      if (w <= start || on[w]) continue;
      on[w] = 1;
      self(self, start, w, len + 1);
      on[w] = 0;
    }
  };
  for (Vertex s = 0; s < n && steps <= step_budget; ++s) {
    on[s] = 1;
    dfs(dfs, s, s, 1);
    on[s] = 0;
  }
  return best;
}

inline Bound upper_bound(const Graph& g) {
  const int m = g.size();
  Bound b{m, BoundReason::TrivialRainbow};
  const int t = max_edge_disjoint_triangles(g).size();
  if (m - 2 * t < b.value) b = {m - 2 * t, BoundReason::TrianglePacking};
  const int len = longest_cycle_found(g);
  if (len >= 3 && m - len + ceil_log2(len) < b.value) b = {m - len + ceil_log2(len), BoundReason::CycleBound};
  return b;
}

// ---------------------------------------------------------------------------
// Search

enum class Acceptance { StrongCfc, StrongPc };

enum class SearchStatus { Found, Infeasible, Exhausted };

constexpr std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "Found";
    case SearchStatus::Infeasible: return "Infeasible";
    case SearchStatus::Exhausted: return "Exhausted";
  }
  return "Unknown";
}

struct SearchOptions {
  std::uint64_t node_budget = 0;  // 0 = unlimited
  bool symmetry_breaking = true;
  // With k = 2, the two edges of a forced 2-path must differ.
  bool forced_path_filter = true;
};

struct DecideResult {
  SearchStatus status = SearchStatus::Infeasible;
  std::optional<EdgeColoring> witness;
  std::uint64_t nodes = 0;

  bool found() const noexcept { return status == SearchStatus::Found; }
};

namespace detail {

// One vertex pair's shortest-path DAG in local vertex numbering; local 0 is
// the source and `target` the sink.
struct PairDag {
  Vertex u = 0;
  Vertex v = 0;
  int local_count = 0;
  int target = 0;
  struct Arc {
    int from;
    int to;
    int edge;
  };
  std::vector<Arc> arcs;
};

// Backtracking over edges in BFS discovery order. After each assignment every
// pair whose DAG contains the edge is checked optimistically, treating
// uncolored edges as free; a pair that cannot be satisfied by any completion
// cuts the branch. Once all its edges are colored the check is exact.
class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, int k, Acceptance acceptance, SearchOptions options)
      : g_(g), k_(k), acceptance_(acceptance), options_(options) {
    if (k_ < 1) throw Error(ErrorKind::InvalidParams, "k must be at least 1");
    if (k_ > 31) throw Error(ErrorKind::TooLarge, "search supports at most 31 colors");
    if (!g.is_connected()) throw Error(ErrorKind::Disconnected, "graph is disconnected");
    full_ = (k_ == 32) ? ~0u : ((1u << k_) - 1);
    build_order();
    build_pairs();
    build_forced();
    colors_.assign(g.size(), 0);
  }

  DecideResult run(const std::function<bool(const EdgeColoring&)>& on_solution = {}) {
    on_solution_ = on_solution;
    result_ = {};
    const bool complete = descend(0, 0);
    if (exhausted_) {
      result_.status = SearchStatus::Exhausted;
    } else if (found_any_) {
      result_.status = SearchStatus::Found;
    } else {
      result_.status = SearchStatus::Infeasible;
    }
    (void)complete;
    result_.nodes = nodes_;
    return result_;
  }

 private:
  void build_order() {
    const int n = g_.order();
    std::vector<char> seen_v(n, 0);
    std::vector<char> seen_e(g_.size(), 0);
    std::vector<Vertex> queue;
    if (n > 0) {
      queue.push_back(0);
      seen_v[0] = 1;
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const Vertex v = queue[qi];
      const auto& nb = g_.neighbors(v);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        const int e = g_.incident(v)[i].index;
        if (!seen_e[e]) {
          seen_e[e] = 1;
          order_.push_back(e);
        }
        if (!seen_v[nb[i]]) {
          seen_v[nb[i]] = 1;
          queue.push_back(nb[i]);
        }
      }
    }
  }

  void build_pairs() {
    const auto dist = all_pairs_distances(g_);
    std::vector<PairDag> pairs;
    for (Vertex u = 0; u < g_.order(); ++u) {
      for (Vertex v = u + 1; v < g_.order(); ++v) {
        if (dist[u][v] <= 1) continue;
        const auto dag = shortest_path_dag(g_, u, v, dist[u], dist[v]);
        PairDag p;
        p.u = u;
        p.v = v;
        std::vector<int> local(g_.order(), -1);
        local[u] = p.local_count++;
        for (const auto& e : dag.edges) {
          if (local[e.from] < 0) local[e.from] = p.local_count++;
          if (local[e.to] < 0) local[e.to] = p.local_count++;
          p.arcs.push_back({local[e.from], local[e.to], e.id.index});
        }
        p.target = local[v];
        pairs.push_back(std::move(p));
      }
    }
    // Cheapest constraints first.
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const PairDag& a, const PairDag& b) { return a.arcs.size() < b.arcs.size(); });
    pairs_ = std::move(pairs);
    pairs_of_edge_.assign(g_.size(), {});
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      std::vector<int> edges;
      for (const auto& a : pairs_[i].arcs) edges.push_back(a.edge);
      std::sort(edges.begin(), edges.end());
      edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
      for (int e : edges) pairs_of_edge_[e].push_back(static_cast<int>(i));
    }
  }

  void build_forced() {
    must_differ_.assign(g_.size(), {});
    if (!(options_.forced_path_filter && k_ == 2 && acceptance_ == Acceptance::StrongCfc)) return;
    for (const auto& t : forced_2paths(g_)) {
      const int a = g_.edge_id(t[0], t[1])->index;
      const int b = g_.edge_id(t[1], t[2])->index;
      must_differ_[a].push_back(b);
      must_differ_[b].push_back(a);
    }
  }

  bool pair_feasible(const PairDag& p) const {
    std::array<std::uint32_t, 64> m0{};
    std::array<std::uint32_t, 64> m1{};
    if (acceptance_ == Acceptance::StrongCfc) {
      m0[0] = full_;
      for (const auto& a : p.arcs) {
        const int c = colors_[a.edge];
        if (c) {
          const std::uint32_t bit = 1u << (c - 1);
          m0[a.to] |= m0[a.from] & ~bit;
          m1[a.to] |= (m1[a.from] & ~bit) | (m0[a.from] & bit);
        } else if (k_ >= 2) {
          m0[a.to] |= m0[a.from];
          m1[a.to] |= m1[a.from] | m0[a.from];
        } else {
          m1[a.to] |= m0[a.from];
        }
      }
      return m1[p.target] != 0;
    }
    // Proper: m1[x] = possible colors of the last edge on a path to x.
    for (const auto& a : p.arcs) {
      const int c = colors_[a.edge];
      const std::uint32_t in = m1[a.from];
      const bool at_source = a.from == 0;
      if (c) {
        const std::uint32_t bit = 1u << (c - 1);
        if (at_source || (in & ~bit)) m1[a.to] |= bit;
      } else if (at_source || std::popcount(in) >= 2) {
        m1[a.to] |= full_;
      } else if (in) {
        m1[a.to] |= full_ & ~in;
      }
    }
    return m1[p.target] != 0;
  }

  bool consistent(int e) const {
    const int c = colors_[e];
    for (int f : must_differ_[e]) {
      if (colors_[f] == c) return false;
    }
    for (int pi : pairs_of_edge_[e]) {
      if (!pair_feasible(pairs_[pi])) return false;
    }
    return true;
  }

  // Returns true to stop the whole search.
  bool descend(std::size_t pos, int max_used) {
    if (options_.node_budget && nodes_ >= options_.node_budget) {
      exhausted_ = true;
      return true;
    }
    ++nodes_;
    if (pos == order_.size()) {
      EdgeColoring c(k_, colors_);
      found_any_ = true;
      if (!result_.witness) result_.witness = c;
      if (on_solution_) return !on_solution_(c);
      return true;
    }
    const int e = order_[pos];
    const int limit = options_.symmetry_breaking ? std::min(k_, max_used + 1) : k_;
    for (int c = 1; c <= limit; ++c) {
      colors_[e] = c;
      if (consistent(e) && descend(pos + 1, std::max(max_used, c))) {
        colors_[e] = 0;
        return true;
      }
    }
    colors_[e] = 0;
    return false;
  }

  const Graph& g_;
  int k_;
  Acceptance acceptance_;
  SearchOptions options_;
  std::uint32_t full_ = 0;
  std::vector<int> order_;
  std::vector<PairDag> pairs_;
  std::vector<std::vector<int>> pairs_of_edge_;
  std::vector<std::vector<int>> must_differ_;
  std::vector<int> colors_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  bool found_any_ = false;
  DecideResult result_;
  std::function<bool(const EdgeColoring&)> on_solution_;
};

}  // namespace detail

// A strong conflict-free connection coloring with at most k colors, or a
// proof (complete search) that none exists.
inline DecideResult scfc_decide(const Graph& g, int k, SearchOptions options = {}) {
  if (g.order() > 64) throw Error(ErrorKind::TooLarge, "search supports at most 64 vertices");
  return detail::ColoringSearch(g, k, Acceptance::StrongCfc, options).run();
}

// Same search with strong proper connection as the acceptance predicate.
inline DecideResult spc_decide(const Graph& g, int k, SearchOptions options = {}) {
  if (g.order() > 64) throw Error(ErrorKind::TooLarge, "search supports at most 64 vertices");
  return detail::ColoringSearch(g, k, Acceptance::StrongPc, options).run();
}

// Calls `visit` for every accepted coloring with at most k colors (up to the
// symmetry breaking chosen in options); `visit` returns false to stop.
inline DecideResult for_each_coloring(const Graph& g, int k, Acceptance acceptance, SearchOptions options,
                                      const std::function<bool(const EdgeColoring&)>& visit) {
  return detail::ColoringSearch(g, k, acceptance, options).run(visit);
}

struct ScfcResult {
  SearchStatus status = SearchStatus::Found;  // Exhausted when the budget ran out
  int value = 0;
  EdgeColoring witness;
  BoundTrace trace;
  std::uint64_t nodes = 0;
};

// Iterative deepening from the lower bound. When the first feasible level is
// the lower bound itself, the level below is searched too, so every result
// carries its own optimality evidence rather than relying on the bound.
inline ScfcResult scfc_exact(const Graph& g, SearchOptions options = {}) {
  if (g.order() <= 1) throw Error(ErrorKind::Trivial, "scfc is defined for nontrivial graphs");
  if (!g.is_connected()) throw Error(ErrorKind::Disconnected, "graph is disconnected");
  ScfcResult r;
  r.trace.lower = lower_bound(g);
  r.trace.upper = upper_bound(g);
  std::uint64_t used = 0;
  auto decide = [&](int k) {
    SearchOptions o = options;
    if (o.node_budget) o.node_budget = used >= o.node_budget ? 1 : o.node_budget - used;
    auto d = scfc_decide(g, k, o);
    used += d.nodes;
    return d;
  };
  for (int k = r.trace.lower.value; k <= g.size(); ++k) {
    auto d = decide(k);
    if (d.status == SearchStatus::Exhausted) {
      r.status = SearchStatus::Exhausted;
      r.value = k;
      r.nodes = used;
      return r;
    }
    if (d.found()) {
      r.value = k;
      r.witness = std::move(*d.witness);
      break;
    }
  }
  if (r.value == r.trace.lower.value) {
    while (r.value > 1) {
      auto d = decide(r.value - 1);
      if (d.status == SearchStatus::Exhausted) {
        r.status = SearchStatus::Exhausted;
        break;
      }
      if (!d.found()) break;
      r.trace.lower_bound_violated = true;
      --r.value;
      r.witness = std::move(*d.witness);
    }
  }
  r.nodes = used;
  return r;
}

}  // namespace scfc

#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scfc/error.hpp"

namespace scfc {

using Vertex = int;

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// Position of an edge in a graph's sorted edge list.
struct EdgeId {
  int index = 0;
  friend constexpr auto operator<=>(EdgeId, EdgeId) = default;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph on vertices 0..n-1. Edges are stored with
// u < v in lexicographic order, so EdgeId values are stable for a given edge
// set regardless of input order.
class Graph {
 public:
  Graph() = default;

  static Graph build(int n, std::vector<std::pair<Vertex, Vertex>> pairs) {
    if (n < 0) throw Error(ErrorKind::InvalidParams, "negative vertex count");
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [a, b] : pairs) {
      if (a < 0 || b < 0 || a >= n || b >= n) {
        throw Error(ErrorKind::VertexOutOfRange,
                    "edge (" + std::to_string(a) + "," + std::to_string(b) + ") with n=" + std::to_string(n));
      }
      if (a == b) throw Error(ErrorKind::SelfLoop, "loop at vertex " + std::to_string(a));
      edges.push_back(a < b ? Edge{a, b} : Edge{b, a});
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end()) {
      throw Error(ErrorKind::DuplicateEdge,
                  "edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ") listed twice");
    }
    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.adj_.assign(n, {});
    g.inc_.assign(n, {});
    for (int i = 0; i < static_cast<int>(g.edges_.size()); ++i) {
      const auto [a, b] = g.edges_[i];
      g.adj_[a].push_back(b);
      g.adj_[b].push_back(a);
    }
    for (Vertex v = 0; v < n; ++v) {
      std::sort(g.adj_[v].begin(), g.adj_[v].end());
      g.inc_[v].reserve(g.adj_[v].size());
      for (Vertex w : g.adj_[v]) g.inc_[v].push_back(*g.find_edge(v, w));
    }
    if (n <= 64) {
      g.rows_.assign(n, 0);
      for (const auto& e : g.edges_) {
        g.rows_[e.u] |= std::uint64_t{1} << e.v;
        g.rows_[e.v] |= std::uint64_t{1} << e.u;
      }
    }
    return g;
  }

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e.index); }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  // Edge ids parallel to neighbors(v).
  const std::vector<EdgeId>& incident(Vertex v) const { return inc_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }

  int max_degree() const noexcept {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
  }

  bool has_edge(Vertex u, Vertex v) const { return edge_id(u, v).has_value(); }

  std::optional<EdgeId> edge_id(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return std::nullopt;
    const auto& nb = adj_[u];
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v) return std::nullopt;
    return inc_[u][it - nb.begin()];
  }

  // Adjacency bitmask of v; only available when order() <= 64.
  std::uint64_t row(Vertex v) const { return rows_.at(v); }
  bool has_rows() const noexcept { return !rows_.empty() || n_ == 0; }

  bool is_complete() const noexcept {
    return size() == n_ * (n_ - 1) / 2;
  }

  bool is_regular(int d) const noexcept {
    return std::all_of(adj_.begin(), adj_.end(),
                       [d](const auto& a) { return static_cast<int>(a.size()) == d; });
  }

  bool is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : adj_[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n_;
  }

  bool is_tree() const { return n_ >= 1 && size() == n_ - 1 && is_connected(); }

  std::vector<std::pair<Vertex, Vertex>> edge_pairs() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.emplace_back(e.u, e.v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const {
    Edge key = u < v ? Edge{u, v} : Edge{v, u};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return EdgeId{static_cast<int>(it - edges_.begin())};
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::vector<EdgeId>> inc_;
  std::vector<std::uint64_t> rows_;
};

inline Graph build_graph(int n, std::vector<std::pair<Vertex, Vertex>> edges) {
  return Graph::build(n, std::move(edges));
}

// Graph with the listed edges removed; vertex set unchanged.
inline Graph without_edges(const Graph& g, const std::vector<EdgeId>& removed) {
  std::vector<char> drop(g.size(), 0);
  for (EdgeId e : removed) drop.at(e.index) = 1;
  std::vector<std::pair<Vertex, Vertex>> keep;
  for (int i = 0; i < g.size(); ++i) {
    if (!drop[i]) keep.emplace_back(g.edges()[i].u, g.edges()[i].v);
  }
  return Graph::build(g.order(), std::move(keep));
}

// Relabels vertex v as perm[v].
inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const auto& e : g.edges()) pairs.emplace_back(perm.at(e.u), perm.at(e.v));
  return Graph::build(g.order(), std::move(pairs));
}

// ---------------------------------------------------------------------------
// graph6

namespace detail {

inline void g6_put_n(std::string& out, long long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

}  // namespace detail

inline std::string write_graph6(const Graph& g) {
  std::string out;
  const int n = g.order();
  detail::g6_put_n(out, n);
  int acc = 0;
  int bits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorKind::MalformedGraph6, "empty input");
  for (char c : text) {
    if (c < 63 || c > 126) throw Error(ErrorKind::MalformedGraph6, "character outside 63..126");
  }
  std::size_t pos = 0;
  auto take = [&](int count) {
    long long value = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= text.size()) throw Error(ErrorKind::MalformedGraph6, "truncated order field");
      value = (value << 6) | (text[pos++] - 63);
    }
    return value;
  };
  long long n = 0;
  if (text[0] != 126) {
    n = take(1);
  } else if (text.size() > 1 && text[1] != 126) {
    pos = 1;
    n = take(3);
  } else {
    pos = 2;
    n = take(6);
  }
  const long long bit_count = n * (n - 1) / 2;
  const long long byte_count = (bit_count + 5) / 6;
  if (static_cast<long long>(text.size() - pos) != byte_count) {
    throw Error(ErrorKind::MalformedGraph6, "expected " + std::to_string(byte_count) + " data bytes for n=" +
                                                std::to_string(n) + ", found " + std::to_string(text.size() - pos));
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  long long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bit_count % 6 != 0) {
    const int last = text.back() - 63;
    const int pad = static_cast<int>(6 - bit_count % 6);
    if (last & ((1 << pad) - 1)) throw Error(ErrorKind::MalformedGraph6, "nonzero padding bits");
  }
  return Graph::build(static_cast<int>(n), std::move(edges));
}

// ---------------------------------------------------------------------------
// Edge-list text: first line "n m", then m lines "u v".

inline std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

inline Graph parse_edge_list(std::istream& in) {
  int n = 0;
  int m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0) throw Error(ErrorKind::MalformedEdgeList, "bad header line");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < m; ++i) {
    Vertex u = 0;
    Vertex v = 0;
    if (!(in >> u >> v)) throw Error(ErrorKind::MalformedEdgeList, "expected " + std::to_string(m) + " edges");
    edges.emplace_back(u, v);
  }
  return Graph::build(n, std::move(edges));
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

// ---------------------------------------------------------------------------
// Distances

inline std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), kUnreachable);
  std::queue<Vertex> queue;
  dist.at(source) = 0;
  queue.push(source);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

using DistanceMatrix = std::vector<std::vector<int>>;

inline DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix d;
  d.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(bfs_distances(g, v));
  return d;
}

inline int diameter(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (int d : bfs_distances(g, v)) {
      if (d == kUnreachable) throw Error(ErrorKind::Disconnected, "diameter of a disconnected graph");
      best = std::max(best, d);
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Shortest-path DAG

struct DagEdge {
  Vertex from = 0;
  Vertex to = 0;
  EdgeId id;
};

// All shortest source->target paths. `level[v]` is d(source, v) for vertices
// on some shortest path and -1 otherwise. `edges` is sorted by the level of
// its tail, so a forward sweep visits every edge after all edges into its tail.
struct ShortestPathDag {
  Vertex source = 0;
  Vertex target = 0;
  int dist = 0;
  std::vector<int> level;
  std::vector<std::vector<DagEdge>> out;
  std::vector<DagEdge> edges;

  bool contains(Vertex v) const { return level.at(v) >= 0; }

  // Number of maximal source->target paths (each is a shortest path).
  unsigned long long count_paths() const {
    std::vector<unsigned long long> ways(level.size(), 0);
    ways[source] = 1;
    for (const auto& e : edges) ways[e.to] += ways[e.from];
    return ways[target];
  }
};

inline ShortestPathDag shortest_path_dag(const Graph& g, Vertex u, Vertex v,
                                         const std::vector<int>& from_u, const std::vector<int>& from_v) {
  const int d = from_u.at(v);
  if (d == kUnreachable) throw Error(ErrorKind::Disconnected, "no path between the queried vertices");
  ShortestPathDag dag;
  dag.source = u;
  dag.target = v;
  dag.dist = d;
  dag.level.assign(g.order(), -1);
  dag.out.assign(g.order(), {});
  for (Vertex a = 0; a < g.order(); ++a) {
    if (from_u[a] != kUnreachable && from_v[a] != kUnreachable && from_u[a] + from_v[a] == d) {
      dag.level[a] = from_u[a];
    }
  }
  for (const auto& e : g.edges()) {
    for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if (dag.level[a] >= 0 && dag.level[b] == dag.level[a] + 1) {
        DagEdge de{a, b, *g.edge_id(a, b)};
        dag.out[a].push_back(de);
        dag.edges.push_back(de);
      }
    }
  }
  std::stable_sort(dag.edges.begin(), dag.edges.end(),
                   [&](const DagEdge& x, const DagEdge& y) { return dag.level[x.from] < dag.level[y.from]; });
  return dag;
}

inline ShortestPathDag shortest_path_dag(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw Error(ErrorKind::InvalidParams, "shortest_path_dag needs distinct endpoints");
  return shortest_path_dag(g, u, v, bfs_distances(g, u), bfs_distances(g, v));
}

// ---------------------------------------------------------------------------
// Structural predicates

// Edges whose removal disconnects their component (iterative low-link).
inline std::vector<EdgeId> bridges(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<EdgeId> out;
  int timer = 0;
  struct Frame {
    Vertex v;
    int parent_edge;
    std::size_t next;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        const Vertex w = nb[f.next];
        const int eid = g.incident(f.v)[f.next].index;
        ++f.next;
        if (eid == f.parent_edge) continue;
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, eid, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& parent = stack.back();
          low[parent.v] = std::min(low[parent.v], low[done.v]);
          if (low[done.v] > disc[parent.v]) out.push_back(EdgeId{done.parent_edge});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool in_short_cycle(const Graph& g, const Edge& e) {
  const auto& nu = g.neighbors(e.u);
  const auto& nv = g.neighbors(e.v);
  for (Vertex a : nu) {
    if (a == e.v) continue;
    if (g.has_edge(a, e.v)) return true;  // triangle
    for (Vertex b : nv) {
      if (b != e.u && b != a && g.has_edge(a, b)) return true;  // 4-cycle u-a-b-v
    }
  }
  return false;
}

// Edges lying on no cycle of length 3 or 4.
inline std::vector<EdgeId> forced_edges(const Graph& g) {
  std::vector<EdgeId> out;
  for (int i = 0; i < g.size(); ++i) {
    if (!in_short_cycle(g, g.edges()[i])) out.push_back(EdgeId{i});
  }
  return out;
}

inline int common_neighbor_count(const Graph& g, Vertex x, Vertex z) {
  const auto& a = g.neighbors(x);
  const auto& b = g.neighbors(z);
  int count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

// x-y-z is forced when xz is not an edge and y is the only common neighbor.
inline bool is_forced_2path(const Graph& g, Vertex x, Vertex y, Vertex z) {
  if (!g.has_edge(x, y) || !g.has_edge(y, z) || x == z) {
    throw Error(ErrorKind::NotAPath, "x-y-z is not a 2-path");
  }
  return !g.has_edge(x, z) && common_neighbor_count(g, x, z) == 1;
}

// All (x, y, z) with x < z such that x-y-z is a forced 2-path.
inline std::vector<std::array<Vertex, 3>> forced_2paths(const Graph& g) {
  std::vector<std::array<Vertex, 3>> out;
  for (Vertex y = 0; y < g.order(); ++y) {
    const auto& nb = g.neighbors(y);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (is_forced_2path(g, nb[i], y, nb[j])) out.push_back({nb[i], y, nb[j]});
      }
    }
  }
  return out;
}

struct ForcedCycle {
  std::vector<Vertex> vertices;
  bool even = false;
};

// Cycles in which every two successive edges form a forced 2-path, up to
// `max_length` (default 2n). Each cycle is reported once, starting at its
// smallest vertex and oriented towards the smaller of that vertex's two cycle
// neighbours. `limit` caps the number of cycles returned.
inline std::vector<ForcedCycle> forced_cycles(const Graph& g, int max_length = -1, std::size_t limit = 10000) {
  const int n = g.order();
  if (max_length < 0) max_length = 2 * n;
  max_length = std::min(max_length, n);
  std::vector<ForcedCycle> out;
  std::vector<Vertex> path;
  std::vector<char> on_path(n, 0);

  auto forced = [&](Vertex x, Vertex, Vertex z) { return !g.has_edge(x, z) && common_neighbor_count(g, x, z) == 1; };

  auto dfs = [&](auto&& self, Vertex start) -> void {
    if (out.size() >= limit) return;
    const Vertex last = path.back();
    for (Vertex w : g.neighbors(last)) {
      if (w < start) continue;
      if (path.size() >= 2 && !forced(path[path.size() - 2], last, w)) continue;
      if (w == start) {
        if (path.size() < 3) continue;
        if (path[1] > path.back()) continue;  // orientation dedup
        // Close: check the two wrap-around triples.
        if (forced(path[path.size() - 2], last, start) && forced(last, start, path[1])) {
          ForcedCycle c{path, path.size() % 2 == 0};
          out.push_back(std::move(c));
          if (out.size() >= limit) return;
        }
        continue;
      }
      if (on_path[w] || static_cast<int>(path.size()) >= max_length) continue;
      on_path[w] = 1;
      path.push_back(w);
      self(self, start);
      path.pop_back();
      on_path[w] = 0;
    }
  };

  for (Vertex s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path.assign(n, 0);
    on_path[s] = 1;
    dfs(dfs, s);
  }
  // Chordless cycles first.
  auto chordless = [&](const ForcedCycle& c) {
    const auto& vs = c.vertices;
    const std::size_t len = vs.size();
    for (std::size_t i = 0; i < len; ++i) {
      for (std::size_t j = i + 2; j < len; ++j) {
        if (i == 0 && j == len - 1) continue;
        if (g.has_edge(vs[i], vs[j])) return false;
      }
    }
    return true;
  };
  std::stable_partition(out.begin(), out.end(), chordless);
  return out;
}

struct PathBundle {
  Vertex u = 0;
  Vertex v = 0;
  std::vector<int> lengths;                  // sorted ascending
  std::vector<std::vector<Vertex>> paths;    // parallel to lengths, u first
};

// For each pair of distinct chain endpoints (vertices of degree != 2), the
// internally disjoint u-v paths whose internal vertices all have degree 2.
// Paths without internal vertices (plain edges) are not reported. A graph that
// is a bare cycle has no endpoints and yields no bundles.
inline std::vector<PathBundle> parallel_path_bundles(const Graph& g) {
  const int n = g.order();
  std::vector<PathBundle> bundles;
  auto find_bundle = [&](Vertex u, Vertex v) -> PathBundle& {
    for (auto& b : bundles) {
      if (b.u == u && b.v == v) return b;
    }
    bundles.push_back(PathBundle{u, v, {}, {}});
    return bundles.back();
  };
  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(u) == 2) continue;
    for (Vertex first : g.neighbors(u)) {
      if (g.degree(first) != 2) continue;
      std::vector<Vertex> chain{u, first};
      Vertex prev = u;
      Vertex cur = first;
      while (g.degree(cur) == 2) {
        const auto& nb = g.neighbors(cur);
        Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
        chain.push_back(cur);
      }
      const Vertex end = cur;
      if (end == u || u > end) continue;  // loops back, or counted from the other side
      PathBundle& b = find_bundle(u, end);
      b.paths.push_back(std::move(chain));
    }
  }
  for (auto& b : bundles) {
    std::sort(b.paths.begin(), b.paths.end(),
              [](const auto& x, const auto& y) { return x.size() != y.size() ? x.size() < y.size() : x < y; });
    for (const auto& p : b.paths) b.lengths.push_back(static_cast<int>(p.size()) - 1);
  }
  std::sort(bundles.begin(), bundles.end(),
            [](const PathBundle& x, const PathBundle& y) { return std::pair{x.u, x.v} < std::pair{y.u, y.v}; });
  return bundles;
}

// Number of connected components of g - w.
inline int cut_vertex_components(const Graph& g, Vertex w) {
  const int n = g.order();
  std::vector<char> seen(n, 0);
  seen.at(w) = 1;
  int comps = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++comps;
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex x : g.neighbors(v)) {
        if (!seen[x]) {
          seen[x] = 1;
          stack.push_back(x);
        }
      }
    }
  }
  return comps;
}

inline int component_count(const Graph& g) {
  const int n = g.order();
  std::vector<char> seen(n, 0);
  int comps = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++comps;
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex x : g.neighbors(v)) {
        if (!seen[x]) {
          seen[x] = 1;
          stack.push_back(x);
        }
      }
    }
  }
  return comps;
}

}  // namespace scfc

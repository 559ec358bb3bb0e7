#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "scfc/graph.hpp"

namespace scfc {

// Colors 1..k, one per EdgeId of a specific graph.
class EdgeColoring {
 public:
  EdgeColoring() = default;

  EdgeColoring(int k, std::vector<int> colors) : k_(k), colors_(std::move(colors)) {
    if (k_ < 1 && !colors_.empty()) throw Error(ErrorKind::MalformedColoring, "k must be at least 1");
    for (int c : colors_) {
      if (c < 1 || c > k_) {
        throw Error(ErrorKind::MalformedColoring, "color " + std::to_string(c) + " outside 1.." + std::to_string(k_));
      }
    }
  }

  // Every edge of g gets color 1.
  static EdgeColoring monochrome(const Graph& g) { return EdgeColoring(1, std::vector<int>(g.size(), 1)); }

  // Edge i gets color i+1.
  static EdgeColoring rainbow(const Graph& g) {
    std::vector<int> colors(g.size());
    for (int i = 0; i < g.size(); ++i) colors[i] = i + 1;
    return EdgeColoring(std::max(1, g.size()), std::move(colors));
  }

  int k() const noexcept { return k_; }
  int size() const noexcept { return static_cast<int>(colors_.size()); }
  int color(EdgeId e) const { return colors_.at(e.index); }
  const std::vector<int>& colors() const noexcept { return colors_; }

  int used_colors() const {
    std::vector<char> seen(k_ + 1, 0);
    int count = 0;
    for (int c : colors_) {
      if (!seen[c]) {
        seen[c] = 1;
        ++count;
      }
    }
    return count;
  }

  // Same coloring with color c replaced by perm[c-1].
  EdgeColoring renamed(const std::vector<int>& perm) const {
    std::vector<int> out(colors_.size());
    int k = 0;
    for (std::size_t i = 0; i < colors_.size(); ++i) {
      out[i] = perm.at(colors_[i] - 1);
      k = std::max(k, out[i]);
    }
    return EdgeColoring(std::max(k, k_), std::move(out));
  }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  int k_ = 0;
  std::vector<int> colors_;
};

inline void require_matches(const Graph& g, const EdgeColoring& c) {
  if (c.size() != g.size()) {
    throw Error(ErrorKind::MalformedColoring, "coloring has " + std::to_string(c.size()) + " colors for " +
                                                  std::to_string(g.size()) + " edges");
  }
}

// Per-color saturating counter with values {0, 1, 2+}, packed as two masks.
// There are 3^k distinct vectors; k is capped at 16.
class ColorCountVector {
 public:
  static constexpr int kMaxColors = 16;

  constexpr ColorCountVector() = default;

  constexpr ColorCountVector add(int color) const {
    const std::uint32_t bit = std::uint32_t{1} << (color - 1);
    ColorCountVector next = *this;
    if (many_ & bit) return next;
    if (once_ & bit) {
      next.once_ &= ~bit;
      next.many_ |= bit;
    } else {
      next.once_ |= bit;
    }
    return next;
  }

  // 0, 1 or 2 (meaning "two or more").
  constexpr int count(int color) const {
    const std::uint32_t bit = std::uint32_t{1} << (color - 1);
    return (many_ & bit) ? 2 : (once_ & bit) ? 1 : 0;
  }

  constexpr bool has_unique_color() const { return once_ != 0; }
  constexpr std::uint32_t packed() const { return once_ | (many_ << kMaxColors); }

  friend constexpr bool operator==(ColorCountVector, ColorCountVector) = default;

 private:
  std::uint32_t once_ = 0;
  std::uint32_t many_ = 0;
};

struct VerificationReport {
  bool ok = true;
  std::optional<std::pair<Vertex, Vertex>> failing_pair;
  std::optional<std::vector<Vertex>> witness_path;
};

inline bool is_conflict_free_path(const Graph& g, const EdgeColoring& c, const std::vector<Vertex>& path) {
  require_matches(g, c);
  if (path.size() < 2) throw Error(ErrorKind::NotAPath, "a path needs at least one edge");
  std::vector<int> count(c.k() + 1, 0);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto e = g.edge_id(path[i], path[i + 1]);
    if (!e) throw Error(ErrorKind::NotAPath, "consecutive vertices are not adjacent");
    ++count[c.color(*e)];
  }
  return std::find(count.begin(), count.end(), 1) != count.end();
}

// Decides whether some shortest u-v path is conflict-free by propagating the
// set of reachable ColorCountVectors through the shortest-path DAG.
inline VerificationReport has_cf_shortest_path(const Graph& g, const EdgeColoring& c, const ShortestPathDag& dag) {
  require_matches(g, c);
  if (c.k() > ColorCountVector::kMaxColors) throw Error(ErrorKind::TooLarge, "verifier supports at most 16 colors");
  const Vertex u = dag.source;
  const Vertex v = dag.target;
  using Pred = std::pair<Vertex, ColorCountVector>;
  std::vector<std::unordered_map<std::uint32_t, std::pair<ColorCountVector, Pred>>> states(g.order());
  states[u].emplace(ColorCountVector{}.packed(), std::pair{ColorCountVector{}, Pred{-1, {}}});
  for (const auto& e : dag.edges) {
    const int color = c.color(e.id);
    for (const auto& [key, entry] : states[e.from]) {
      const ColorCountVector next = entry.first.add(color);
      states[e.to].try_emplace(next.packed(), std::pair{next, Pred{e.from, entry.first}});
    }
  }
  VerificationReport report;
  for (const auto& [key, entry] : states[v]) {
    if (!entry.first.has_unique_color()) continue;
    std::vector<Vertex> path{v};
    Vertex at = v;
    ColorCountVector state = entry.first;
    while (at != u) {
      const Pred pred = states[at].at(state.packed()).second;
      at = pred.first;
      state = pred.second;
      path.push_back(at);
    }
    std::reverse(path.begin(), path.end());
    report.witness_path = std::move(path);
    return report;
  }
  report.ok = false;
  report.failing_pair = std::pair{u, v};
  return report;
}

inline VerificationReport has_cf_shortest_path(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v) {
  if (u == v) throw Error(ErrorKind::InvalidParams, "endpoints must differ");
  return has_cf_shortest_path(g, c, shortest_path_dag(g, u, v));
}

// Every pair of vertices joined by a conflict-free shortest path. Pairs are
// scanned in (u, v) order so the reported failing pair is the first one.
inline VerificationReport is_strong_cfc(const Graph& g, const EdgeColoring& c) {
  require_matches(g, c);
  const auto dist = all_pairs_distances(g);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (dist[u][v] == kUnreachable) throw Error(ErrorKind::Disconnected, "graph is disconnected");
      if (dist[u][v] == 1) continue;
      auto r = has_cf_shortest_path(g, c, shortest_path_dag(g, u, v, dist[u], dist[v]));
      if (!r.ok) return r;
    }
  }
  return {};
}

// Every pair joined by a shortest path whose consecutive edges differ in
// color; the DP state at a vertex is the set of possible last colors.
inline VerificationReport is_strong_pc(const Graph& g, const EdgeColoring& c) {
  require_matches(g, c);
  const auto dist = all_pairs_distances(g);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (dist[u][v] == kUnreachable) throw Error(ErrorKind::Disconnected, "graph is disconnected");
      if (dist[u][v] == 1) continue;
      const auto dag = shortest_path_dag(g, u, v, dist[u], dist[v]);
      std::vector<std::vector<char>> last(g.order(), std::vector<char>(c.k() + 1, 0));
      std::vector<char> start(g.order(), 0);
      start[u] = 1;
      for (const auto& e : dag.edges) {
        const int color = c.color(e.id);
        bool reach = start[e.from] != 0;
        for (int x = 1; x <= c.k() && !reach; ++x) reach = last[e.from][x] && x != color;
        if (reach) last[e.to][color] = 1;
      }
      if (std::find(last[v].begin(), last[v].end(), 1) == last[v].end()) {
        VerificationReport r;
        r.ok = false;
        r.failing_pair = std::pair{u, v};
        return r;
      }
    }
  }
  return {};
}

// On a tree paths are unique, so conflict-free connection and its strong
// version coincide.
inline bool is_cfc_tree(const Graph& t, const EdgeColoring& c) {
  if (!t.is_tree()) throw Error(ErrorKind::NotATree, "graph is not a tree");
  return is_strong_cfc(t, c).ok;
}

}  // namespace scfc

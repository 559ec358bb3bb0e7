#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "scfc/graph.hpp"

// Generators for the named graph families. Labelings are fixed so that
// colorings can address specific edges:
//
//   star(m), star_plus_matching, gamma, wheel:  centre/hub is vertex 0
//   complete_bipartite(s, t):  side A = 0..s-1, side B = s..s+t-1
//   ladder/prism/mobius(k):    s_i = i-1, t_i = k+i-1 for i = 1..k
//   f0(k):                     ladder(k) plus x = 2k, y = 2k+1
namespace scfc::families {

namespace detail {

inline void require(bool ok, std::string_view what) {
  if (!ok) throw Error(ErrorKind::InvalidParams, std::string(what));
}

}  // namespace detail

using EdgePairs = std::vector<std::pair<Vertex, Vertex>>;

// Path on n vertices 0-1-...-(n-1).
inline Graph path(int n) {
  detail::require(n >= 1, "path needs n >= 1");
  EdgePairs e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return build_graph(n, std::move(e));
}

inline Graph cycle(int n) {
  detail::require(n >= 3, "cycle needs n >= 3");
  EdgePairs e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return build_graph(n, std::move(e));
}

// Star with m edges.
inline Graph star(int m) {
  detail::require(m >= 1, "star needs m >= 1");
  EdgePairs e;
  for (int i = 1; i <= m; ++i) e.emplace_back(0, i);
  return build_graph(m + 1, std::move(e));
}

inline Graph complete(int n) {
  detail::require(n >= 1, "complete graph needs n >= 1");
  EdgePairs e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return build_graph(n, std::move(e));
}

inline Graph complete_bipartite(int s, int t) {
  detail::require(s >= 1 && t >= 1, "complete bipartite needs s, t >= 1");
  EdgePairs e;
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < t; ++j) e.emplace_back(i, s + j);
  }
  return build_graph(s + t, std::move(e));
}

// W_n: a rim cycle 1..n with hub 0 joined to every rim vertex; n is the hub degree.
inline Graph wheel(int n) {
  detail::require(n >= 3, "wheel needs n >= 3");
  EdgePairs e;
  for (int i = 1; i <= n; ++i) {
    e.emplace_back(0, i);
    e.emplace_back(i, i % n + 1);
  }
  return build_graph(n + 1, std::move(e));
}

// S_{m,t}: m edges in total, t triangles (0, 2i+1, 2i+2) through the centre
// and m - 3t pendant edges at the centre.
inline Graph star_plus_matching(int m, int t) {
  detail::require(t >= 0 && m >= 3 * t && m >= 1, "star_plus_matching needs m >= 3t, t >= 0");
  const int leaves = m - t;
  EdgePairs e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  for (int i = 0; i < t; ++i) e.emplace_back(2 * i + 1, 2 * i + 2);
  return build_graph(leaves + 1, std::move(e));
}

// Gamma with m edges: star 0-{1..m-1} plus the pendant edge (1, m).
inline Graph gamma(int m) {
  detail::require(m >= 3, "gamma needs m >= 3");
  EdgePairs e;
  for (int i = 1; i < m; ++i) e.emplace_back(0, i);
  e.emplace_back(1, m);
  return build_graph(m + 1, std::move(e));
}

// Two copies of K_{1,k-1} glued at a leaf: centres 0 and k, shared leaf 1.
inline Graph q_k(int k) {
  detail::require(k >= 2, "q_k needs k >= 2");
  EdgePairs e;
  for (int i = 1; i < k; ++i) e.emplace_back(0, i);
  e.emplace_back(k, 1);
  for (int i = k + 1; i <= 2 * k - 2; ++i) e.emplace_back(k, i);
  return build_graph(2 * k - 1, std::move(e));
}

inline Vertex s_vertex(int i) { return i - 1; }
inline Vertex t_vertex(int k, int i) { return k + i - 1; }

inline EdgePairs ladder_edges(int k) {
  EdgePairs e;
  for (int i = 1; i <= k; ++i) {
    e.emplace_back(s_vertex(i), t_vertex(k, i));
    if (i < k) {
      e.emplace_back(s_vertex(i), s_vertex(i + 1));
      e.emplace_back(t_vertex(k, i), t_vertex(k, i + 1));
    }
  }
  return e;
}

// L_k = P_k x K_2.
inline Graph ladder(int k) {
  detail::require(k >= 1, "ladder needs k >= 1");
  return build_graph(2 * k, ladder_edges(k));
}

// C_k x K_2: ladder plus s_1 s_k and t_1 t_k.
inline Graph prism(int k) {
  detail::require(k >= 3, "prism needs k >= 3");
  auto e = ladder_edges(k);
  e.emplace_back(s_vertex(1), s_vertex(k));
  e.emplace_back(t_vertex(k, 1), t_vertex(k, k));
  return build_graph(2 * k, std::move(e));
}

// M_{2k}: ladder plus the crossed edges s_1 t_k and t_1 s_k.
inline Graph mobius(int k) {
  detail::require(k >= 3, "mobius needs k >= 3");
  auto e = ladder_edges(k);
  e.emplace_back(s_vertex(1), t_vertex(k, k));
  e.emplace_back(t_vertex(k, 1), s_vertex(k));
  return build_graph(2 * k, std::move(e));
}

inline Vertex f0_x(int k) { return 2 * k; }
inline Vertex f0_y(int k) { return 2 * k + 1; }

// F_0(k): ladder plus x, y with edges xy, x s_1, x t_1, y s_k, y t_k.
inline Graph f0(int k) {
  detail::require(k >= 2, "f0 needs k >= 2");
  auto e = ladder_edges(k);
  const Vertex x = f0_x(k);
  const Vertex y = f0_y(k);
  e.emplace_back(x, y);
  e.emplace_back(x, s_vertex(1));
  e.emplace_back(x, t_vertex(k, 1));
  e.emplace_back(y, s_vertex(k));
  e.emplace_back(y, t_vertex(k, k));
  return build_graph(2 * k + 2, std::move(e));
}

enum class Family {
  Path,
  Cycle,
  Star,
  StarPlusMatching,
  Gamma,
  Complete,
  CompleteBipartite,
  Wheel,
  Qk,
  Ladder,
  Prism,
  Mobius,
  F0,
};

struct FamilySpec {
  Family family = Family::Path;
  std::vector<int> params;
};

inline std::optional<Family> family_from_name(std::string_view name) {
  static const std::pair<std::string_view, Family> kNames[] = {
      {"path", Family::Path},
      {"cycle", Family::Cycle},
      {"star", Family::Star},
      {"star_plus_matching", Family::StarPlusMatching},
      {"smt", Family::StarPlusMatching},
      {"gamma", Family::Gamma},
      {"complete", Family::Complete},
      {"complete_bipartite", Family::CompleteBipartite},
      {"kst", Family::CompleteBipartite},
      {"wheel", Family::Wheel},
      {"q_k", Family::Qk},
      {"qk", Family::Qk},
      {"ladder", Family::Ladder},
      {"prism", Family::Prism},
      {"mobius", Family::Mobius},
      {"f0", Family::F0},
  };
  for (const auto& [n, f] : kNames) {
    if (n == name) return f;
  }
  return std::nullopt;
}

inline int param_count(Family f) {
  return (f == Family::StarPlusMatching || f == Family::CompleteBipartite) ? 2 : 1;
}

inline Graph generate(const FamilySpec& spec) {
  const auto& p = spec.params;
  detail::require(static_cast<int>(p.size()) == param_count(spec.family), "wrong number of family parameters");
  switch (spec.family) {
    case Family::Path: return path(p[0]);
    case Family::Cycle: return cycle(p[0]);
    case Family::Star: return star(p[0]);
    case Family::StarPlusMatching: return star_plus_matching(p[0], p[1]);
    case Family::Gamma: return gamma(p[0]);
    case Family::Complete: return complete(p[0]);
    case Family::CompleteBipartite: return complete_bipartite(p[0], p[1]);
    case Family::Wheel: return wheel(p[0]);
    case Family::Qk: return q_k(p[0]);
    case Family::Ladder: return ladder(p[0]);
    case Family::Prism: return prism(p[0]);
    case Family::Mobius: return mobius(p[0]);
    case Family::F0: return f0(p[0]);
  }
  throw Error(ErrorKind::InvalidParams, "unknown family");
}

}  // namespace scfc::families

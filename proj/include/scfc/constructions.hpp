#pragma once

#include <string_view>
#include <vector>

#include "scfc/coloring.hpp"
#include "scfc/families.hpp"
#include "scfc/solver.hpp"

// Explicit colorings for the named families. Every construction is checked
// with is_strong_cfc before it is returned; nothing here is taken on faith.
namespace scfc::constructions {

enum class Construction {
  RulerPath,
  CycleClosing,
  StarDistinct,
  TrianglePacking,
  SmtColoring,
  KstVectors,
  PrismPattern,
  MobiusPattern,
  F0Pattern,
  GammaPattern,
};

constexpr std::string_view to_string(Construction c) {
  switch (c) {
    case Construction::RulerPath: return "ruler_path";
    case Construction::CycleClosing: return "cycle";
    case Construction::StarDistinct: return "star";
    case Construction::TrianglePacking: return "triangle_packing";
    case Construction::SmtColoring: return "smt";
    case Construction::KstVectors: return "kst";
    case Construction::PrismPattern: return "prism";
    case Construction::MobiusPattern: return "mobius";
    case Construction::F0Pattern: return "f0";
    case Construction::GammaPattern: return "gamma";
  }
  return "unknown";
}

struct ConstructionResult {
  Construction name = Construction::RulerPath;
  Graph graph;
  EdgeColoring coloring;
  int claimed_colors = 0;
  VerificationReport report;
};

namespace detail {

inline void require(bool ok, std::string_view what) {
  if (!ok) throw Error(ErrorKind::InvalidParams, std::string(what));
}

// Builds the coloring from per-edge colors set through `paint` and verifies it.
class Painter {
 public:
  explicit Painter(const Graph& g) : g_(g), colors_(g.size(), 0) {}

  void paint(Vertex a, Vertex b, int color) {
    auto e = g_.edge_id(a, b);
    if (!e) throw Error(ErrorKind::InvalidParams, "construction references a missing edge");
    colors_[e->index] = color;
  }

  void fill(int color) {
    for (int& c : colors_) {
      if (c == 0) c = color;
    }
  }

  EdgeColoring coloring() const {
    int k = 0;
    for (int c : colors_) {
      if (c == 0) throw Error(ErrorKind::InvalidParams, "construction left an edge uncolored");
      k = std::max(k, c);
    }
    return EdgeColoring(k, colors_);
  }

 private:
  const Graph& g_;
  std::vector<int> colors_;
};

inline ConstructionResult finish(Construction name, Graph g, EdgeColoring c, int claimed) {
  ConstructionResult r{name, std::move(g), std::move(c), claimed, {}};
  r.report = is_strong_cfc(r.graph, r.coloring);
  return r;
}

inline ConstructionResult verified(Construction name, Graph g, EdgeColoring c, int claimed) {
  auto r = finish(name, std::move(g), std::move(c), claimed);
  if (!r.report.ok) {
    throw Error(ErrorKind::VerificationFailed,
                std::string(to_string(name)) + " coloring fails at pair (" +
                    std::to_string(r.report.failing_pair->first) + "," +
                    std::to_string(r.report.failing_pair->second) + ")");
  }
  return r;
}

inline int two_adic_color(int i) {
  int x = 0;
  while (i % 2 == 0) {
    i /= 2;
    ++x;
  }
  return x + 1;
}

}  // namespace detail

// Edge e_i = (i-1, i) of path(n) gets 1 + (exponent of 2 in i).
inline ConstructionResult ruler_path_coloring(int n) {
  detail::require(n >= 2, "ruler coloring needs n >= 2");
  Graph g = families::path(n);
  detail::Painter p(g);
  for (int i = 1; i < n; ++i) p.paint(i - 1, i, detail::two_adic_color(i));
  return detail::verified(Construction::RulerPath, std::move(g), p.coloring(), ceil_log2(n));
}

// Ruler coloring on the spanning path 0..n-1, then the closing edge (n-1, 0)
// gets ceil(log2 n) when exactly one color occurs once on the path and
// ceil(log2 n) - 1 otherwise. The remaining closing colors are tried next.
// Some orders (21, 41..45) admit no closing color within ceil(log2 n); those
// fall back to an exact search for a ceil(log2 n)-coloring, which needs
// n <= 64.
inline ConstructionResult cycle_coloring(int n) {
  detail::require(n >= 3, "cycle coloring needs n >= 3");
  const Graph g = families::cycle(n);
  const int top = ceil_log2(n);
  std::vector<int> count(top + 2, 0);
  for (int i = 1; i < n; ++i) ++count[detail::two_adic_color(i)];
  const int singletons = static_cast<int>(std::count(count.begin(), count.end(), 1));
  const int literal = singletons == 1 ? top : std::max(1, top - 1);
  std::vector<int> order{literal};
  for (int c = top; c >= 1; --c) {
    if (c != literal) order.push_back(c);
  }
  for (int closing : order) {
    detail::Painter p(g);
    for (int i = 1; i < n; ++i) p.paint(i - 1, i, detail::two_adic_color(i));
    p.paint(n - 1, 0, closing);
    auto r = detail::finish(Construction::CycleClosing, g, p.coloring(), top);
    if (r.report.ok) return r;
  }
  if (n > 64) throw Error(ErrorKind::VerificationFailed, "no closing color works for C_" + std::to_string(n));
  const auto found = scfc_decide(g, top);
  if (!found.found()) throw Error(ErrorKind::VerificationFailed, "no " + std::to_string(top) + "-coloring of C_" + std::to_string(n));
  return detail::finish(Construction::CycleClosing, g, *found.witness, top);
}

inline ConstructionResult star_coloring(int m) {
  Graph g = families::star(m);
  auto c = EdgeColoring::rainbow(g);
  return detail::verified(Construction::StarDistinct, std::move(g), std::move(c), m);
}

// One color per packed triangle and a fresh color for every other edge:
// m - 2t colors. The verification report is returned rather than enforced.
inline ConstructionResult triangle_packing_coloring(const Graph& g, const TrianglePacking& packing) {
  std::vector<int> colors(g.size(), 0);
  int next = 0;
  for (const auto& t : packing.triangles) {
    const auto edges = triangle_edges(g, t);
    ++next;
    for (EdgeId e : edges) {
      if (colors[e.index] != 0) throw Error(ErrorKind::NotEdgeDisjoint, "packed triangles share an edge");
      colors[e.index] = next;
    }
  }
  for (int& c : colors) {
    if (c == 0) c = ++next;
  }
  const int claimed = g.size() - 2 * packing.size();
  return detail::finish(Construction::TrianglePacking, g, EdgeColoring(std::max(1, next), std::move(colors)), claimed);
}

// S_{m,t} with its t triangles packed: exactly m - 2t colors.
inline ConstructionResult smt_coloring(int m, int t) {
  const Graph g = families::star_plus_matching(m, t);
  TrianglePacking packing;
  for (int i = 0; i < t; ++i) packing.triangles.push_back({0, 2 * i + 1, 2 * i + 2});
  auto r = triangle_packing_coloring(g, packing);
  r.name = Construction::SmtColoring;
  if (!r.report.ok) throw Error(ErrorKind::VerificationFailed, "S_{m,t} coloring failed");
  return r;
}

// Each vertex w_j on the t-side gets a distinct vector over q = ceil(t^(1/s))
// colors (non-constant vectors first); edge (u_i, w_j) takes coordinate i.
inline ConstructionResult kst_vector_coloring(int s, int t) {
  detail::require(s >= 1 && s <= t, "kst coloring needs 1 <= s <= t");
  int q = 1;
  auto power = [s](int base) {
    long long v = 1;
    for (int i = 0; i < s; ++i) v *= base;
    return v;
  };
  while (power(q) < t) ++q;
  std::vector<std::vector<int>> vectors;
  std::vector<int> digits(s, 0);
  for (long long idx = 0; idx < power(q); ++idx) {
    long long rest = idx;
    for (int i = s - 1; i >= 0; --i) {
      digits[i] = static_cast<int>(rest % q) + 1;
      rest /= q;
    }
    vectors.push_back(digits);
  }
  std::stable_partition(vectors.begin(), vectors.end(), [](const std::vector<int>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) != v.end();
  });
  Graph g = families::complete_bipartite(s, t);
  detail::Painter p(g);
  for (int j = 0; j < t; ++j) {
    for (int i = 0; i < s; ++i) p.paint(i, s + j, vectors[j][i]);
  }
  return detail::verified(Construction::KstVectors, std::move(g), p.coloring(), q);
}

// k = 3: triangles 1, rungs 2. k = 4, 6: both rims alternate 1/2 with
// c(s1 s2) != c(t1 t2), rungs 1.
inline ConstructionResult prism_coloring(int k) {
  detail::require(k == 3 || k == 4 || k == 6, "prism coloring needs k in {3, 4, 6}");
  using families::s_vertex;
  using families::t_vertex;
  Graph g = families::prism(k);
  detail::Painter p(g);
  if (k == 3) {
    for (int i = 1; i <= 3; ++i) {
      const int j = i % 3 + 1;
      p.paint(s_vertex(i), s_vertex(j), 1);
      p.paint(t_vertex(k, i), t_vertex(k, j), 1);
    }
    p.fill(2);
  } else {
    for (int i = 1; i <= k; ++i) {
      const int j = i % k + 1;
      p.paint(s_vertex(i), s_vertex(j), i % 2 == 1 ? 1 : 2);
      p.paint(t_vertex(k, i), t_vertex(k, j), i % 2 == 1 ? 2 : 1);
    }
    p.fill(1);
  }
  return detail::verified(Construction::PrismPattern, std::move(g), p.coloring(), 2);
}

// Even k: for odd i, s_i s_{i+1}, t_i t_{i+1} and the rung s_i t_i are 1.
// Odd k: for odd i, s_i s_{i+1} and t_{i+1} t_{i+2} are 1, as are every rung
// and the crossed edge s_k t_1. All other edges are 2.
inline ConstructionResult mobius_coloring(int k) {
  detail::require(k >= 3 && k <= 7, "mobius coloring needs 3 <= k <= 7");
  using families::s_vertex;
  using families::t_vertex;
  Graph g = families::mobius(k);
  detail::Painter p(g);
  if (k % 2 == 0) {
    for (int i = 1; i < k; i += 2) {
      p.paint(s_vertex(i), s_vertex(i + 1), 1);
      p.paint(t_vertex(k, i), t_vertex(k, i + 1), 1);
      p.paint(s_vertex(i), t_vertex(k, i), 1);
    }
  } else {
    for (int i = 1; i <= k; i += 2) {
      if (i + 1 <= k) p.paint(s_vertex(i), s_vertex(i + 1), 1);
      if (i + 2 <= k) p.paint(t_vertex(k, i + 1), t_vertex(k, i + 2), 1);
    }
    for (int i = 1; i <= k; ++i) p.paint(s_vertex(i), t_vertex(k, i), 1);
    p.paint(s_vertex(k), t_vertex(k, 1), 1);
  }
  p.fill(2);
  return detail::verified(Construction::MobiusPattern, std::move(g), p.coloring(), 2);
}

// xy is 2; the four edges at x and y towards the ladder are 1; ladder edges
// s_i s_{i+1}, t_i t_{i+1}, s_i t_i are 1 for even i and 2 for odd i.
inline ConstructionResult f0_coloring(int k) {
  detail::require(k == 2 || k == 4, "f0 coloring needs k in {2, 4}");
  using families::s_vertex;
  using families::t_vertex;
  Graph g = families::f0(k);
  const Vertex x = families::f0_x(k);
  const Vertex y = families::f0_y(k);
  detail::Painter p(g);
  p.paint(x, y, 2);
  p.paint(x, s_vertex(1), 1);
  p.paint(x, t_vertex(k, 1), 1);
  p.paint(y, s_vertex(k), 1);
  p.paint(y, t_vertex(k, k), 1);
  for (int i = 1; i <= k; ++i) {
    const int c = i % 2 == 0 ? 1 : 2;
    if (i < k) {
      p.paint(s_vertex(i), s_vertex(i + 1), c);
      p.paint(t_vertex(k, i), t_vertex(k, i + 1), c);
    }
    p.paint(s_vertex(i), t_vertex(k, i), c);
  }
  return detail::verified(Construction::F0Pattern, std::move(g), p.coloring(), 2);
}

// Star edges (0, i) get color i; the pendant edge (1, m) reuses color 2,
// which is not the color of the star edge at vertex 1.
inline ConstructionResult gamma_coloring(int m) {
  detail::require(m >= 4, "gamma coloring needs m >= 4");
  Graph g = families::gamma(m);
  detail::Painter p(g);
  for (int i = 1; i < m; ++i) p.paint(0, i, i);
  p.paint(1, m, 2);
  return detail::verified(Construction::GammaPattern, std::move(g), p.coloring(), m - 1);
}

inline std::optional<Construction> construction_from_name(std::string_view name) {
  for (auto c : {Construction::RulerPath, Construction::CycleClosing, Construction::StarDistinct,
                 Construction::TrianglePacking, Construction::SmtColoring, Construction::KstVectors,
                 Construction::PrismPattern, Construction::MobiusPattern, Construction::F0Pattern,
                 Construction::GammaPattern}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

// Dispatch for the parameterised constructions (the CLI entry point).
// TrianglePacking is applied to S_{m,t} and takes (m, t) like smt.
inline ConstructionResult build(Construction c, const std::vector<int>& params) {
  auto need = [&](std::size_t count) {
    detail::require(params.size() == count, std::string(to_string(c)) + " takes " + std::to_string(count) +
                                                " parameter(s)");
  };
  switch (c) {
    case Construction::RulerPath: need(1); return ruler_path_coloring(params[0]);
    case Construction::CycleClosing: need(1); return cycle_coloring(params[0]);
    case Construction::StarDistinct: need(1); return star_coloring(params[0]);
    case Construction::TrianglePacking:
    case Construction::SmtColoring: need(2); return smt_coloring(params[0], params[1]);
    case Construction::KstVectors: need(2); return kst_vector_coloring(params[0], params[1]);
    case Construction::PrismPattern: need(1); return prism_coloring(params[0]);
    case Construction::MobiusPattern: need(1); return mobius_coloring(params[0]);
    case Construction::F0Pattern: need(1); return f0_coloring(params[0]);
    case Construction::GammaPattern: need(1); return gamma_coloring(params[0]);
  }
  throw Error(ErrorKind::InvalidParams, "unknown construction");
}

}  // namespace scfc::constructions

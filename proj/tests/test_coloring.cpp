#include <numeric>

#include "common.hpp"
#include "oracle.hpp"

using namespace scfc;

namespace {

EdgeColoring along(const Graph& g, const std::vector<std::pair<std::pair<Vertex, Vertex>, int>>& spec, int k) {
  std::vector<int> colors(g.size(), 0);
  for (const auto& [e, c] : spec) colors[g.edge_id(e.first, e.second)->index] = c;
  return EdgeColoring(k, colors);
}

}  // namespace

TEST(EdgeColoring, Validation) {
  using testing_util::error_kind;
  EXPECT_EQ(error_kind([] { EdgeColoring(2, {1, 3}); }), ErrorKind::MalformedColoring);
  EXPECT_EQ(error_kind([] { EdgeColoring(2, {0, 1}); }), ErrorKind::MalformedColoring);
  EXPECT_EQ(error_kind([] { is_strong_cfc(families::path(3), EdgeColoring(1, {1})); }), ErrorKind::MalformedColoring);
  const EdgeColoring c(3, {1, 3, 1});
  EXPECT_EQ(c.used_colors(), 2);
  EXPECT_EQ(c.renamed({2, 1, 3}).colors(), (std::vector<int>{2, 3, 2}));
}

TEST(ColorCountVector, Saturates) {
  ColorCountVector v;
  EXPECT_FALSE(v.has_unique_color());
  v = v.add(3);
  EXPECT_EQ(v.count(3), 1);
  EXPECT_TRUE(v.has_unique_color());
  v = v.add(3).add(3);
  EXPECT_EQ(v.count(3), 2);
  EXPECT_FALSE(v.has_unique_color());
  EXPECT_EQ(v, ColorCountVector{}.add(3).add(3));
  EXPECT_EQ(ColorCountVector{}.add(16).count(16), 1);
}

TEST(ConflictFreePath, Examples) {
  const Graph p = families::path(4);
  EXPECT_TRUE(is_conflict_free_path(p, EdgeColoring(2, {1, 2, 1}), {0, 1, 2, 3}));
  EXPECT_FALSE(is_conflict_free_path(p, EdgeColoring(2, {1, 1, 2}), {0, 1, 2}));
  EXPECT_TRUE(is_conflict_free_path(p, EdgeColoring(1, {1, 1, 1}), {2, 3}));
  EXPECT_EQ(testing_util::error_kind([&] { is_conflict_free_path(p, EdgeColoring::monochrome(p), {0, 2}); }),
            ErrorKind::NotAPath);
}

TEST(CfShortestPath, Examples) {
  const Graph c6 = families::cycle(6);
  const auto alt = along(c6, {{{0, 1}, 1}, {{1, 2}, 2}, {{2, 3}, 1}, {{3, 4}, 2}, {{4, 5}, 1}, {{0, 5}, 2}}, 2);
  for (Vertex u = 0; u < 6; ++u) {
    for (Vertex v = u + 1; v < 6; ++v) EXPECT_TRUE(has_cf_shortest_path(c6, alt, u, v).ok);
  }
  const Graph p = families::path(4);
  const auto r = has_cf_shortest_path(p, EdgeColoring::monochrome(p), 0, 3);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.failing_pair, (std::pair<Vertex, Vertex>{0, 3}));
  const Graph k3 = families::complete(3);
  for (int a = 1; a <= 2; ++a) {
    for (int b = 1; b <= 2; ++b) EXPECT_TRUE(is_strong_cfc(k3, EdgeColoring(2, {a, b, 1})).ok);
  }
}

TEST(StrongCfc, Examples) {
  const Graph s = families::star_plus_matching(9, 2);
  // One color per triangle, a fresh one per pendant edge.
  std::vector<int> colors(s.size());
  int next = 2;
  for (int i = 0; i < s.size(); ++i) {
    const auto& e = s.edges()[i];
    const bool tri = (e.u == 0 && e.v <= 4) || (e.u >= 1 && e.v <= 4);
    colors[i] = tri ? ((e.v <= 2) ? 1 : 2) : ++next;
  }
  const EdgeColoring c(7, colors);
  EXPECT_EQ(c.used_colors(), 5);
  EXPECT_TRUE(is_strong_cfc(s, c).ok);

  const Graph g = testing_util::c6_chord();
  oracle::any_coloring(g.size(), 2, [&](const std::vector<int>& col) {
    EXPECT_FALSE(is_strong_cfc(g, EdgeColoring(2, col)).ok);
    return false;
  });

  for (const Graph& h : testing_util::small_connected(6)) EXPECT_TRUE(is_strong_cfc(h, EdgeColoring::rainbow(h)).ok);
}

TEST(StrongPc, Examples) {
  const Graph c4 = families::cycle(4);
  EXPECT_TRUE(is_strong_pc(c4, along(c4, {{{0, 1}, 1}, {{1, 2}, 2}, {{2, 3}, 1}, {{0, 3}, 2}}, 2)).ok);
  EXPECT_FALSE(is_strong_pc(families::path(3), EdgeColoring(1, {1, 1})).ok);
  const Graph p3 = families::prism(3);
  std::vector<int> colors(p3.size());
  for (int i = 0; i < p3.size(); ++i) {
    const auto& e = p3.edges()[i];
    colors[i] = (e.v - e.u == 3) ? 2 : 1;  // rungs s_i t_i are 3 apart
  }
  EXPECT_TRUE(is_strong_pc(p3, EdgeColoring(2, colors)).ok);
}

TEST(CfcTree, Examples) {
  EXPECT_TRUE(is_cfc_tree(families::star(3), EdgeColoring(3, {1, 2, 3})));
  EXPECT_FALSE(is_cfc_tree(families::star(3), EdgeColoring(2, {1, 2, 2})));
  EXPECT_TRUE(is_cfc_tree(families::path(4), EdgeColoring(2, {1, 2, 1})));
  EXPECT_EQ(testing_util::error_kind([] { is_cfc_tree(families::cycle(4), EdgeColoring(1, {1, 1, 1, 1})); }),
            ErrorKind::NotATree);
}

namespace {

// Pair-by-pair comparison of both verifiers with the path-enumeration oracle.
void compare_all_pairs(const Graph& g, const std::vector<int>& colors, int k) {
  const EdgeColoring c(k, colors);
  bool all_cf = true;
  bool all_pc = true;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const auto r = has_cf_shortest_path(g, c, u, v);
      const bool expected = oracle::pair_ok(g, colors, u, v);
      ASSERT_EQ(r.ok, expected) << write_graph6(g) << " pair " << u << "," << v;
      all_cf = all_cf && expected;
      if (r.ok) {
        ASSERT_TRUE(r.witness_path.has_value());
        const auto& w = *r.witness_path;
        ASSERT_EQ(static_cast<int>(w.size()) - 1, bfs_distances(g, u)[v]);
        ASSERT_EQ(w.front(), u);
        ASSERT_EQ(w.back(), v);
        ASSERT_TRUE(is_conflict_free_path(g, c, w));
      }
    }
  }
  all_pc = oracle::strong_pc(g, colors);
  ASSERT_EQ(is_strong_cfc(g, c).ok, all_cf) << write_graph6(g);
  ASSERT_EQ(is_strong_pc(g, c).ok, all_pc) << write_graph6(g);
}

}  // namespace

TEST(Verifier, MatchesOracleExhaustively) {
  for (const Graph& g : testing_util::small_connected(6)) {
    const int m = g.size();
    if (m <= 8) {
      oracle::any_coloring(m, 2, [&](const std::vector<int>& c) {
        compare_all_pairs(g, c, 2);
        return ::testing::Test::HasFatalFailure();
      });
    }
    if (m <= 6) {
      oracle::any_coloring(m, 3, [&](const std::vector<int>& c) {
        compare_all_pairs(g, c, 3);
        return ::testing::Test::HasFatalFailure();
      });
    }
    if (HasFatalFailure()) return;
  }
}

TEST(Verifier, MatchesOracleOnSamples) {
  std::mt19937 rng(3);
  for (const Graph& g : testing_util::small_connected(6)) {
    for (int trial = 0; trial < 20; ++trial) {
      const int k = 2 + static_cast<int>(rng() % 3);
      std::vector<int> colors(g.size());
      for (int& c : colors) c = 1 + static_cast<int>(rng() % k);
      compare_all_pairs(g, colors, k);
      if (HasFatalFailure()) return;
    }
  }
}

TEST(Verifier, RenamingAndRefinement) {
  std::mt19937 rng(5);
  for (const Graph& g : testing_util::small_connected(6)) {
    for (int trial = 0; trial < 10; ++trial) {
      const int k = 2 + static_cast<int>(rng() % 2);
      std::vector<int> colors(g.size());
      for (int& c : colors) c = 1 + static_cast<int>(rng() % k);
      const EdgeColoring c(k, colors);
      const bool ok = is_strong_cfc(g, c).ok;
      std::vector<int> perm(k);
      std::iota(perm.begin(), perm.end(), 1);
      std::shuffle(perm.begin(), perm.end(), rng);
      ASSERT_EQ(is_strong_cfc(g, c.renamed(perm)).ok, ok);
      if (!ok) continue;
      // Split color 1 into itself and a fresh color.
      std::vector<int> split = colors;
      for (int& x : split) {
        if (x == 1 && rng() % 2) x = k + 1;
      }
      ASSERT_TRUE(is_strong_cfc(g, EdgeColoring(k + 1, split)).ok) << write_graph6(g);
    }
  }
}

TEST(Verifier, AdjacentPairsAlwaysPass) {
  const Graph g = families::wheel(6);
  const EdgeColoring mono = EdgeColoring::monochrome(g);
  for (const auto& e : g.edges()) EXPECT_TRUE(has_cf_shortest_path(g, mono, e.u, e.v).ok);
}

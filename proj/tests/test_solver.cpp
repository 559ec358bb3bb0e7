#include "common.hpp"
#include "oracle.hpp"

using namespace scfc;
using testing_util::small_connected;

namespace {

// C5 on 0..4 with pendant vertices 5 at 0 and 6 at 2: the degree-3 vertices
// 0 and 2 are joined by parallel paths of lengths 2 and 3.
Graph c5_with_pendants() { return build_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {2, 6}}); }

}  // namespace

TEST(Conditions, Examples) {
  EXPECT_TRUE(condition_cutvertex(families::star(3)));
  EXPECT_FALSE(condition_cutvertex(families::path(5)));
  EXPECT_TRUE(condition_bridgepath(families::path(6)));
  EXPECT_EQ(longest_bridge_path(families::path(6)), 5);
  EXPECT_FALSE(condition_bridgepath(families::path(4)));
  const Graph g = c5_with_pendants();
  EXPECT_TRUE(condition_parallel_2_3(g));
  EXPECT_GE(scfc_exact(g).value, 3);
  EXPECT_FALSE(condition_parallel_2_3(families::cycle(5)));
  EXPECT_FALSE(any_structural_condition(families::complete(5)));
}

TEST(Conditions, ImplyThreeColorsOnSmallGraphs) {
  for (const Graph& g : small_connected(7)) {
    if (!any_structural_condition(g)) continue;
    ASSERT_FALSE(scfc_decide(g, 2).found()) << write_graph6(g);
  }
}

TEST(TrianglePacking, Examples) {
  EXPECT_EQ(max_edge_disjoint_triangles(families::complete(4)).size(), 1);
  EXPECT_EQ(max_edge_disjoint_triangles(families::star_plus_matching(9, 2)).size(), 2);
  EXPECT_EQ(max_edge_disjoint_triangles(families::cycle(6)).size(), 0);
  EXPECT_EQ(max_edge_disjoint_triangles(families::complete(7)).size(), 7);
  EXPECT_EQ(testing_util::error_kind([] { triangle_edges(families::cycle(4), Triangle{0, 1, 2}); }),
            ErrorKind::NotATriangle);
}

TEST(TrianglePacking, MatchesOracle) {
  for (const Graph& g : small_connected(7)) {
    const auto p = max_edge_disjoint_triangles(g);
    ASSERT_EQ(p.size(), oracle::max_triangle_packing(g)) << write_graph6(g);
    std::vector<int> used(g.size(), 0);
    for (const auto& t : p.triangles) {
      for (EdgeId e : triangle_edges(g, t)) ASSERT_EQ(used[e.index]++, 0);
    }
  }
}

TEST(Bounds, Examples) {
  EXPECT_EQ(lower_bound(families::complete(5)).value, 1);
  EXPECT_EQ(lower_bound(families::star(4)).value, 4);
  EXPECT_EQ(lower_bound(families::star(4)).reason, BoundReason::TreeBound);
  EXPECT_EQ(scfc_exact(testing_util::c6_chord()).value, 3);
  EXPECT_EQ(upper_bound(families::cycle(8)).value, 3);
  EXPECT_EQ(upper_bound(families::cycle(8)).reason, BoundReason::CycleBound);
  EXPECT_EQ(upper_bound(families::star_plus_matching(9, 2)).value, 5);
  EXPECT_EQ(upper_bound(families::q_k(5)).value, families::q_k(5).size());
  EXPECT_EQ(ceil_log2(1), 0);
  EXPECT_EQ(ceil_log2(5), 3);
  EXPECT_EQ(ceil_log2(8), 3);
}

TEST(Bounds, SandwichAndInequalities) {
  for (const Graph& g : small_connected(7)) {
    const auto r = scfc_exact(g);
    ASSERT_EQ(r.status, SearchStatus::Found);
    EXPECT_LE(r.trace.lower.value, r.value) << write_graph6(g);
    EXPECT_GE(r.trace.upper.value, r.value) << write_graph6(g);
    EXPECT_FALSE(r.trace.lower_bound_violated) << write_graph6(g);
    const int m = g.size();
    const int d = diameter(g);
    EXPECT_LE(d - ceil_log2(d + 1), m - r.value) << write_graph6(g);
    const int len = longest_cycle_found(g);
    if (len >= 3) {
      EXPECT_LE(len - ceil_log2(len), m - r.value) << write_graph6(g);
    }
  }
}

TEST(Decide, Examples) {
  const auto k4 = scfc_decide(families::complete(4), 1);
  ASSERT_TRUE(k4.found());
  EXPECT_EQ(k4.witness->colors(), std::vector<int>(6, 1));
  EXPECT_FALSE(scfc_decide(testing_util::c6_chord(), 2).found());
  const auto m4 = scfc_decide(families::mobius(4), 2);
  ASSERT_TRUE(m4.found());
  EXPECT_TRUE(is_strong_cfc(families::mobius(4), *m4.witness).ok);
}

TEST(Decide, SpcExamples) {
  EXPECT_TRUE(spc_decide(families::prism(3), 2).found());
  EXPECT_FALSE(spc_decide(families::star(3), 2).found());
  EXPECT_TRUE(spc_decide(families::star(3), 3).found());
  const auto c4 = spc_decide(families::cycle(4), 2);
  ASSERT_TRUE(c4.found());
  EXPECT_TRUE(is_strong_pc(families::cycle(4), *c4.witness).ok);
}

TEST(Decide, MonotoneAndSound) {
  for (const Graph& g : small_connected(6)) {
    bool previous = false;
    for (int k = 1; k <= 4; ++k) {
      const auto d = scfc_decide(g, k);
      if (previous) {
        ASSERT_TRUE(d.found()) << write_graph6(g) << " k=" << k;
      }
      if (d.found()) {
        ASSERT_LE(d.witness->k(), k);
        ASSERT_TRUE(is_strong_cfc(g, *d.witness).ok);
      }
      previous = d.found();
    }
  }
}

TEST(Decide, ForcedPathFilterIsSound) {
  SearchOptions plain;
  plain.forced_path_filter = false;
  plain.symmetry_breaking = false;
  for (const Graph& g : small_connected(7)) {
    ASSERT_EQ(scfc_decide(g, 2).found(), scfc_decide(g, 2, plain).found()) << write_graph6(g);
  }
}

TEST(Decide, SpcMatchesOracle) {
  for (const Graph& g : small_connected(6)) {
    if (g.size() > 9) continue;
    for (int k = 1; k <= 2; ++k) {
      const bool expected =
          oracle::any_coloring(g.size(), k, [&](const std::vector<int>& c) { return oracle::strong_pc(g, c); });
      const auto d = spc_decide(g, k);
      ASSERT_EQ(d.found(), expected) << write_graph6(g) << " k=" << k;
      if (d.found()) {
        ASSERT_TRUE(is_strong_pc(g, *d.witness).ok);
      }
    }
  }
}

// Without symmetry breaking the enumerator visits each accepted coloring
// exactly once.
TEST(ForEachColoring, CountsMatchOracle) {
  SearchOptions plain;
  plain.forced_path_filter = false;
  plain.symmetry_breaking = false;
  for (const Graph& g : small_connected(5)) {
    for (int k = 2; k <= 3; ++k) {
      if (k == 3 && g.size() > 7) continue;
      std::uint64_t expected = 0;
      oracle::any_coloring(g.size(), k, [&](const std::vector<int>& c) {
        expected += oracle::strong_cfc(g, c);
        return false;
      });
      std::uint64_t got = 0;
      std::set<std::vector<int>> seen;
      for_each_coloring(g, k, Acceptance::StrongCfc, plain, [&](const EdgeColoring& c) {
        ++got;
        seen.insert(c.colors());
        return true;
      });
      ASSERT_EQ(got, expected) << write_graph6(g) << " k=" << k;
      ASSERT_EQ(seen.size(), got);
    }
  }
}

TEST(ForEachColoring, StopsWhenAsked) {
  int visits = 0;
  for_each_coloring(families::cycle(4), 3, Acceptance::StrongCfc, {}, [&](const EdgeColoring&) {
    ++visits;
    return false;
  });
  EXPECT_EQ(visits, 1);
}

TEST(Exact, Examples) {
  EXPECT_EQ(scfc_exact(families::star(5)).value, 5);
  EXPECT_EQ(scfc_exact(families::wheel(6)).value, 2);
  const int c7 = scfc_exact(families::cycle(7)).value;
  EXPECT_TRUE(c7 == 2 || c7 == 3);
  EXPECT_EQ(c7, 3);
  EXPECT_EQ(scfc_exact(families::cycle(6)).value, 2);
}

TEST(Exact, MatchesNaiveOracleUpToFive) {
  for (const Graph& g : small_connected(5)) {
    const auto r = scfc_exact(g);
    ASSERT_EQ(r.value, oracle::scfc(g)) << write_graph6(g);
    ASSERT_TRUE(is_strong_cfc(g, r.witness).ok);
    ASSERT_LE(r.witness.used_colors(), r.value);
  }
}

TEST(Exact, BudgetSurfacesAsExhausted) {
  SearchOptions tight;
  tight.node_budget = 3;
  const auto r = scfc_exact(families::prism(8), tight);
  EXPECT_EQ(r.status, SearchStatus::Exhausted);
  const auto d = scfc_decide(families::prism(8), 2, tight);
  EXPECT_EQ(d.status, SearchStatus::Exhausted);
  EXPECT_FALSE(d.found());
}

TEST(Exact, Errors) {
  using testing_util::error_kind;
  EXPECT_EQ(error_kind([] { scfc_exact(build_graph(1, {})); }), ErrorKind::Trivial);
  EXPECT_EQ(error_kind([] { scfc_exact(build_graph(4, {{0, 1}, {2, 3}})); }), ErrorKind::Disconnected);
}

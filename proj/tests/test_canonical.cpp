#include <map>
#include <set>

#include "common.hpp"
#include "oracle.hpp"

using namespace scfc;

TEST(Canonical, Examples) {
  // The outer rim of a prism, relabeled, against C6.
  const Graph rim = build_graph(6, {{0, 3}, {3, 5}, {5, 1}, {1, 4}, {4, 2}, {2, 0}});
  EXPECT_EQ(canonical_form(rim), canonical_form(families::cycle(6)));
  EXPECT_NE(canonical_form(families::complete_bipartite(3, 3)), canonical_form(families::prism(3)));
  EXPECT_FALSE(oracle::isomorphic(families::complete_bipartite(3, 3), families::prism(3)));
  EXPECT_TRUE(is_isomorphic(families::mobius(3), families::complete_bipartite(3, 3)));
  EXPECT_TRUE(is_isomorphic(families::gamma(3), families::path(4)));
  EXPECT_TRUE(is_isomorphic(families::q_k(3), families::path(5)));
  EXPECT_TRUE(is_isomorphic(families::wheel(3), families::complete(4)));
}

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937 rng(11);
  for (const Graph& g : testing_util::small_connected(7)) {
    const CanonicalForm f = canonical_form(g);
    for (int trial = 0; trial < 3; ++trial) ASSERT_EQ(canonical_form(testing_util::shuffled(g, rng)), f);
  }
  std::vector<Graph> larger = {families::prism(8), families::mobius(8), families::f0(7), families::wheel(12),
                               families::complete_bipartite(4, 7), parse_graph6("IheA@GUAo")};
  for (const Graph& g : larger) {
    const CanonicalForm f = canonical_form(g);
    for (int trial = 0; trial < 10; ++trial) ASSERT_EQ(canonical_form(testing_util::shuffled(g, rng)), f);
  }
}

TEST(Canonical, LabelingReproducesForm) {
  for (const Graph& g : testing_util::small_connected(6)) {
    const auto lab = canonical_labeling(g);
    EXPECT_EQ(canonical_form(relabel(g, lab)), canonical_form(g));
    EXPECT_EQ(canonical_graph(g), graph_from_form(canonical_form(g)));
  }
}

// Forms partition labeled graphs exactly like brute-force permutation
// certificates do.
TEST(Canonical, AgreesWithBruteForceOnSixVertices) {
  std::vector<std::pair<Vertex, Vertex>> all;
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) all.emplace_back(i, j);
  }
  std::map<CanonicalForm, std::vector<bool>> by_form;
  std::map<std::vector<bool>, CanonicalForm> by_cert;
  for (std::uint32_t s = 0; s < (1u << all.size()); s += 7) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if ((s >> i) & 1) e.push_back(all[i]);
    }
    const Graph g = build_graph(6, e);
    const auto f = canonical_form(g);
    const auto c = oracle::brute_certificate(g);
    auto [fi, fnew] = by_form.emplace(f, c);
    ASSERT_EQ(fi->second, c);
    auto [ci, cnew] = by_cert.emplace(c, f);
    ASSERT_EQ(ci->second, f);
  }
}

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "common.hpp"
#include "oracle.hpp"

using namespace scfc;

namespace {

std::set<std::vector<bool>> brute_set(const Corpus& c) {
  std::set<std::vector<bool>> out;
  for (const auto& g : c.graphs) out.insert(oracle::brute_certificate(g));
  return out;
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST(EnumerateConnected, CountsUpToSeven) {
  const int expected[] = {0, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(enumerate_connected(n).graphs.size(), std::size_t(expected[n])) << n;
}

TEST(EnumerateConnected, MatchesBruteForceClasses) {
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(brute_set(enumerate_connected(n)), oracle::connected_classes(n)) << n;
}

TEST(EnumerateConnected, DeterministicAndIsomorphFree) {
  const auto a = enumerate_connected(6);
  const auto b = enumerate_connected(6);
  ASSERT_EQ(a.graphs.size(), b.graphs.size());
  std::set<CanonicalForm> forms;
  for (std::size_t i = 0; i < a.graphs.size(); ++i) {
    EXPECT_EQ(a.graphs[i], b.graphs[i]);
    EXPECT_TRUE(a.graphs[i].is_connected());
    forms.insert(canonical_form(a.graphs[i]));
    if (i > 0) {
      EXPECT_LE(a.graphs[i - 1].size(), a.graphs[i].size());
    }
  }
  EXPECT_EQ(forms.size(), a.graphs.size());
}

TEST(EnumerateConnected, Errors) {
  EXPECT_EQ(testing_util::error_kind([] { enumerate_connected(9); }), ErrorKind::TooLarge);
  EXPECT_EQ(testing_util::error_kind([] { enumerate_connected(0); }), ErrorKind::InvalidParams);
}

TEST(EnumerateCubic, Counts) {
  const std::pair<int, std::size_t> expected[] = {{4, 1}, {6, 2}, {8, 5}, {10, 19}, {12, 85}};
  for (auto [n, count] : expected) {
    const auto c = enumerate_cubic(n);
    ASSERT_EQ(c.graphs.size(), count) << n;
    std::set<CanonicalForm> forms;
    for (const auto& g : c.graphs) {
      EXPECT_TRUE(g.is_regular(3));
      EXPECT_TRUE(g.is_connected());
      forms.insert(canonical_form(g));
    }
    EXPECT_EQ(forms.size(), count);
  }
}

TEST(EnumerateCubic, SmallOrdersMatchConnectedFilter) {
  for (int n : {4, 6}) {
    std::set<CanonicalForm> filtered;
    for (const auto& g : enumerate_connected(n).graphs) {
      if (g.is_regular(3)) filtered.insert(canonical_form(g));
    }
    std::set<CanonicalForm> generated;
    for (const auto& g : enumerate_cubic(n).graphs) generated.insert(canonical_form(g));
    EXPECT_EQ(generated, filtered);
  }
  const auto six = enumerate_cubic(6);
  std::set<CanonicalForm> forms;
  for (const auto& g : six.graphs) forms.insert(canonical_form(g));
  EXPECT_TRUE(forms.count(canonical_form(families::complete_bipartite(3, 3))));
  EXPECT_TRUE(forms.count(canonical_form(families::prism(3))));
}

TEST(EnumerateCubic, EightMatchesConnectedFilter) {
  std::set<CanonicalForm> filtered;
  for (const auto& g : enumerate_connected(8).graphs) {
    if (g.is_regular(3)) filtered.insert(canonical_form(g));
  }
  std::set<CanonicalForm> generated;
  for (const auto& g : enumerate_cubic(8).graphs) generated.insert(canonical_form(g));
  EXPECT_EQ(generated, filtered);
}

TEST(EnumerateCubic, Errors) {
  EXPECT_EQ(testing_util::error_kind([] { enumerate_cubic(7); }), ErrorKind::OddOrder);
  EXPECT_EQ(testing_util::error_kind([] { enumerate_cubic(14); }), ErrorKind::TooLarge);
  EXPECT_EQ(testing_util::error_kind([] { enumerate_cubic(2); }), ErrorKind::InvalidParams);
}

// The checked-in fixtures equal the in-process generator output.
TEST(EnumerateCubic, FixturesMatchGenerator) {
  for (int n : {10, 12}) {
    const auto file = stream_graph6(std::string(SCFC_FIXTURE_DIR) + "/cubic_" + std::to_string(n) + ".g6");
    const auto generated = enumerate_cubic(n);
    ASSERT_EQ(file.graphs.size(), generated.graphs.size());
    std::set<CanonicalForm> a;
    std::set<CanonicalForm> b;
    for (const auto& g : file.graphs) a.insert(canonical_form(g));
    for (const auto& g : generated.graphs) b.insert(canonical_form(g));
    EXPECT_EQ(a, b);
  }
}

TEST(ConnectedSubgraphs, Examples) {
  const auto k3 = enumerate_connected_subgraphs(families::complete(3));
  ASSERT_EQ(k3.graphs.size(), 2u);
  EXPECT_TRUE(is_isomorphic(k3.graphs[0], families::path(2)));
  EXPECT_TRUE(is_isomorphic(k3.graphs[1], families::path(3)));

  const auto p3 = enumerate_connected_subgraphs(families::path(3));
  ASSERT_EQ(p3.graphs.size(), 1u);
  EXPECT_TRUE(is_isomorphic(p3.graphs[0], families::path(2)));

  // q_k(3) is the path on 5 vertices: its proper subtrees are the shorter paths.
  const auto q3 = enumerate_connected_subgraphs(families::q_k(3));
  ASSERT_EQ(q3.graphs.size(), 3u);
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(is_isomorphic(q3.graphs[i], families::path(i + 2)));

  EXPECT_EQ(testing_util::error_kind([] { enumerate_connected_subgraphs(families::complete(6)); }),
            ErrorKind::TooLarge);
}

TEST(Graph6Stream, ReadsInOrder) {
  const auto path = temp_file("scfc_three.g6", "Bw\nCh\n\nEhEG\n");
  const auto c = stream_graph6(path);
  ASSERT_EQ(c.graphs.size(), 3u);
  EXPECT_EQ(write_graph6(c.graphs[0]), "Bw");
  EXPECT_EQ(write_graph6(c.graphs[2]), "EhEG");
  EXPECT_EQ(write_graph6_lines(c), "Bw\nCh\nEhEG\n");
}

TEST(Graph6Stream, BadLineNamesItsNumber) {
  const auto path = temp_file("scfc_bad.g6", "Bw\nD?\nCh\n");
  Graph6Reader reader(path);
  ASSERT_TRUE(reader.next().has_value());
  try {
    reader.next();
    FAIL() << "expected MalformedGraph6";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MalformedGraph6);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(Graph6Stream, EmptyAndMissingFiles) {
  EXPECT_TRUE(stream_graph6(temp_file("scfc_empty.g6", "")).graphs.empty());
  EXPECT_EQ(testing_util::error_kind([] { stream_graph6("/nonexistent/scfc.g6"); }), ErrorKind::IoError);
}

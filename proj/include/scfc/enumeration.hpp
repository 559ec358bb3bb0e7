#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "scfc/canonical.hpp"
#include "scfc/graph.hpp"

namespace scfc {

// A finite set of pairwise non-isomorphic graphs with a description of where
// it came from. Generated corpora list graphs in canonical labeling, ordered
// by (edge count, canonical form).
struct Corpus {
  std::string source;
  std::vector<Graph> graphs;
};

namespace detail {

inline Corpus corpus_from_forms(std::string source, const std::set<CanonicalForm>& forms) {
  std::vector<std::pair<int, const CanonicalForm*>> order;
  for (const auto& f : forms) {
    int m = 0;
    for (auto r : f.rows) m += std::popcount(r);
    order.emplace_back(m / 2, &f);
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  Corpus c{std::move(source), {}};
  c.graphs.reserve(order.size());
  for (const auto& [m, f] : order) c.graphs.push_back(graph_from_form(*f));
  return c;
}

}  // namespace detail

// Connected graphs on n vertices up to isomorphism. Every connected graph has
// a vertex whose removal keeps it connected, so extending each connected graph
// on n-1 vertices by a vertex with every nonempty neighbourhood is exhaustive.
inline Corpus enumerate_connected(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidParams, "n must be at least 1");
  if (n > 8) throw Error(ErrorKind::TooLarge, "in-process enumeration is limited to n <= 8");
  std::set<CanonicalForm> level{canonical_form(build_graph(1, {}))};
  for (int order = 2; order <= n; ++order) {
    std::set<CanonicalForm> next;
    for (const auto& f : level) {
      const Graph h = graph_from_form(f);
      const auto base = h.edge_pairs();
      for (std::uint32_t subset = 1; subset < (1u << (order - 1)); ++subset) {
        auto edges = base;
        for (int v = 0; v < order - 1; ++v) {
          if ((subset >> v) & 1) edges.emplace_back(v, order - 1);
        }
        next.insert(canonical_form(build_graph(order, std::move(edges))));
      }
    }
    level = std::move(next);
  }
  return detail::corpus_from_forms("connected(n=" + std::to_string(n) + ")", level);
}

// Connected 3-regular graphs on n vertices up to isomorphism. Labeled graphs
// are built in breadth-first order: the smallest unsaturated vertex is joined
// to a later unsaturated vertex or to the next unused one, its new neighbours
// taken in increasing order. Every connected cubic graph has such a labeling
// (any BFS order), and the leaves are deduplicated by canonical form.
inline Corpus enumerate_cubic(int n) {
  if (n % 2 != 0) throw Error(ErrorKind::OddOrder, "cubic graphs need an even order");
  if (n > 12) throw Error(ErrorKind::TooLarge, "in-process cubic enumeration is limited to n <= 12");
  if (n < 4) throw Error(ErrorKind::InvalidParams, "cubic graphs need n >= 4");
  std::vector<int> deg(n, 0);
  std::vector<std::uint64_t> adj(n, 0);
  std::set<CanonicalForm> forms;

  auto emit = [&] {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if ((adj[i] >> j) & 1) edges.emplace_back(i, j);
      }
    }
    forms.insert(canonical_form(build_graph(n, std::move(edges))));
  };

  auto go = [&](auto&& self, int next_new, int min_w) -> void {
    int v = 0;
    while (v < n && deg[v] == 3) ++v;
    if (v == n) {
      emit();
      return;
    }
    if (v >= next_new) return;  // unsaturated part unreachable: disconnected
    const int lo = std::max(min_w, v + 1);
    const int hi = std::min(next_new, n - 1);
    for (int w = lo; w <= hi; ++w) {
      if (deg[w] == 3 || ((adj[v] >> w) & 1)) continue;
      adj[v] |= std::uint64_t{1} << w;
      adj[w] |= std::uint64_t{1} << v;
      ++deg[v];
      ++deg[w];
      const int nn = (w == next_new) ? next_new + 1 : next_new;
      // Stay on v with larger neighbours until it is saturated.
      self(self, nn, deg[v] == 3 ? 0 : w + 1);
      --deg[v];
      --deg[w];
      adj[v] &= ~(std::uint64_t{1} << w);
      adj[w] &= ~(std::uint64_t{1} << v);
    }
  };
  go(go, 1, 0);
  return detail::corpus_from_forms("cubic(n=" + std::to_string(n) + ")", forms);
}

// Connected proper subgraphs of g, as edge subsets with their incident
// vertices (isolated vertices dropped), up to isomorphism.
inline Corpus enumerate_connected_subgraphs(const Graph& g) {
  const int m = g.size();
  if (m > 14) throw Error(ErrorKind::TooLarge, "subgraph enumeration is limited to m <= 14");
  std::set<CanonicalForm> forms;
  for (std::uint32_t subset = 1; subset + 1 < (1u << m); ++subset) {
    std::vector<int> index(g.order(), -1);
    int count = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < m; ++i) {
      if (!((subset >> i) & 1)) continue;
      const auto& e = g.edges()[i];
      if (index[e.u] < 0) index[e.u] = count++;
      if (index[e.v] < 0) index[e.v] = count++;
      edges.emplace_back(index[e.u], index[e.v]);
    }
    const Graph h = build_graph(count, std::move(edges));
    if (h.is_connected()) forms.insert(canonical_form(h));
  }
  return detail::corpus_from_forms("subgraphs(" + write_graph6(g) + ")", forms);
}

// Lazily parses a graph6 file, one graph per line. Blank lines are skipped;
// a malformed line raises MalformedGraph6 naming its 1-based line number.
class Graph6Reader {
 public:
  explicit Graph6Reader(const std::string& path) : in_(path), path_(path) {
    if (!in_) throw Error(ErrorKind::IoError, "cannot open " + path);
  }

  std::optional<Graph> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (line.empty()) continue;
      try {
        return parse_graph6(line);
      } catch (const Error& e) {
        throw Error(ErrorKind::MalformedGraph6, path_ + " line " + std::to_string(line_) + ": " + e.what());
      }
    }
    return std::nullopt;
  }

  int line() const noexcept { return line_; }

 private:
  std::ifstream in_;
  std::string path_;
  int line_ = 0;
};

inline Corpus stream_graph6(const std::string& path) {
  Graph6Reader reader(path);
  Corpus c{"file(" + path + ")", {}};
  while (auto g = reader.next()) c.graphs.push_back(std::move(*g));
  return c;
}

inline std::string write_graph6_lines(const Corpus& corpus) {
  std::string out;
  for (const auto& g : corpus.graphs) {
    out += write_graph6(g);
    out += '\n';
  }
  return out;
}

}  // namespace scfc

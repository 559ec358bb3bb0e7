#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "scfc/graph.hpp"

namespace scfc {

// Isomorphism certificate: the adjacency rows of the graph under its
// canonical vertex ordering. Two graphs are isomorphic iff their forms are
// equal. Ordering is lexicographic so forms can key ordered containers.
struct CanonicalForm {
  int n = 0;
  std::vector<std::uint64_t> rows;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept {
    std::size_t h = std::hash<int>{}(f.n);
    for (auto r : f.rows) h = h * 0x9E3779B97F4A7C15ull + std::hash<std::uint64_t>{}(r);
    return h;
  }
};

namespace detail {

// Exact canonical labeling by individualization-refinement. Children of a
// search node are pruned when an automorphism already found (fixing the
// individualized prefix pointwise) maps them onto an explored sibling.
class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {
    if (n_ > 64) throw Error(ErrorKind::TooLarge, "canonical form supports at most 64 vertices");
  }

  std::vector<Vertex> run() {
    std::vector<std::vector<Vertex>> cells;
    if (n_ > 0) {
      // Initial partition by degree keeps the first refinement cheap.
      std::vector<Vertex> all(n_);
      std::iota(all.begin(), all.end(), 0);
      cells.push_back(std::move(all));
      refine(cells);
    }
    std::vector<Vertex> prefix;
    search(cells, prefix);
    return best_lab_;
  }

 private:
  using Cells = std::vector<std::vector<Vertex>>;

  static std::uint64_t mask_of(const std::vector<Vertex>& cell) {
    std::uint64_t m = 0;
    for (Vertex v : cell) m |= std::uint64_t{1} << v;
    return m;
  }

  // Equitable refinement; splits each cell by neighbour count into each
  // splitter cell, fragments ordered by increasing count.
  void refine(Cells& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
        const std::uint64_t splitter = mask_of(cells[s]);
        for (std::size_t c = 0; c < cells.size(); ++c) {
          if (cells[c].size() < 2) continue;
          std::vector<std::pair<int, Vertex>> keyed;
          keyed.reserve(cells[c].size());
          for (Vertex v : cells[c]) keyed.emplace_back(std::popcount(g_.row(v) & splitter), v);
          std::stable_sort(keyed.begin(), keyed.end(),
                           [](const auto& a, const auto& b) { return a.first < b.first; });
          if (keyed.front().first == keyed.back().first) continue;
          Cells pieces;
          for (std::size_t i = 0; i < keyed.size(); ++i) {
            if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
            pieces.back().push_back(keyed[i].second);
          }
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
          changed = true;
          break;
        }
      }
    }
  }

  std::vector<std::uint64_t> certificate(const std::vector<Vertex>& lab) const {
    std::vector<int> pos(n_);
    for (int i = 0; i < n_; ++i) pos[lab[i]] = i;
    std::vector<std::uint64_t> rows(n_, 0);
    for (int i = 0; i < n_; ++i) {
      std::uint64_t r = g_.row(lab[i]);
      std::uint64_t out = 0;
      while (r) {
        int w = std::countr_zero(r);
        r &= r - 1;
        out |= std::uint64_t{1} << pos[w];
      }
      rows[i] = out;
    }
    return rows;
  }

  void leaf(const Cells& cells) {
    std::vector<Vertex> lab;
    lab.reserve(n_);
    for (const auto& c : cells) lab.push_back(c.front());
    auto cert = certificate(lab);
    if (best_lab_.empty() || cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_lab_ = std::move(lab);
    } else if (cert == best_cert_) {
      // lab[i] -> best_lab_[i] is an automorphism.
      std::vector<Vertex> gamma(n_);
      for (int i = 0; i < n_; ++i) gamma[lab[i]] = best_lab_[i];
      bool identity = true;
      for (int v = 0; v < n_; ++v) identity = identity && gamma[v] == v;
      if (!identity) automorphisms_.push_back(std::move(gamma));
    }
  }

  Vertex find(std::vector<Vertex>& parent, Vertex v) const {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }

  void search(const Cells& cells, std::vector<Vertex>& prefix) {
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].size() > 1) {
        target = i;
        break;
      }
    }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    std::vector<Vertex> explored;
    for (Vertex v : cells[target]) {
      if (!explored.empty() && equivalent_to_explored(v, explored, prefix)) continue;
      Cells next = cells;
      std::vector<Vertex> rest;
      for (Vertex w : cells[target]) {
        if (w != v) rest.push_back(w);
      }
      next[target] = {v};
      next.insert(next.begin() + static_cast<std::ptrdiff_t>(target) + 1, std::move(rest));
      refine(next);
      prefix.push_back(v);
      search(next, prefix);
      prefix.pop_back();
      explored.push_back(v);
    }
  }

  bool equivalent_to_explored(Vertex v, const std::vector<Vertex>& explored, const std::vector<Vertex>& prefix) const {
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    bool any = false;
    for (const auto& gamma : automorphisms_) {
      bool fixes = true;
      for (Vertex p : prefix) fixes = fixes && gamma[p] == p;
      if (!fixes) continue;
      any = true;
      for (Vertex x = 0; x < n_; ++x) {
        Vertex a = find(parent, x);
        Vertex b = find(parent, gamma[x]);
        if (a != b) parent[a] = b;
      }
    }
    if (!any) return false;
    const Vertex root = find(parent, v);
    for (Vertex e : explored) {
      if (find(parent, e) == root) return true;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> best_lab_;
  std::vector<std::uint64_t> best_cert_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace detail

// canonical_labeling(g)[i] is the vertex placed at canonical position i.
inline std::vector<Vertex> canonical_labeling(const Graph& g) {
  return detail::Canonizer(g).run();
}

inline CanonicalForm canonical_form(const Graph& g) {
  const auto lab = canonical_labeling(g);
  const int n = g.order();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[lab[i]] = i;
  CanonicalForm f{n, std::vector<std::uint64_t>(n, 0)};
  for (const auto& e : g.edges()) {
    f.rows[pos[e.u]] |= std::uint64_t{1} << pos[e.v];
    f.rows[pos[e.v]] |= std::uint64_t{1} << pos[e.u];
  }
  return f;
}

inline Graph graph_from_form(const CanonicalForm& f) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < f.n; ++i) {
    for (int j = i + 1; j < f.n; ++j) {
      if ((f.rows[i] >> j) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph::build(f.n, std::move(edges));
}

// The graph relabeled into canonical order.
inline Graph canonical_graph(const Graph& g) { return graph_from_form(canonical_form(g)); }

inline bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace scfc

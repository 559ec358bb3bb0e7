#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "scfc/canonical.hpp"
#include "scfc/enumeration.hpp"
#include "scfc/families.hpp"
#include "scfc/io.hpp"
#include "scfc/parallel.hpp"
#include "scfc/solver.hpp"

namespace scfc::harness {

enum class CheckStatus { Pass, Fail, Partial };

constexpr std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "Pass";
    case CheckStatus::Fail: return "Fail";
    case CheckStatus::Partial: return "Partial";
  }
  return "?";
}

// 0 all Pass, 1 any Fail, 2 any Partial (and no Fail).
inline int exit_code(const std::vector<CheckStatus>& statuses) {
  int code = 0;
  for (auto s : statuses) {
    if (s == CheckStatus::Fail) return 1;
    if (s == CheckStatus::Partial) code = 2;
  }
  return code;
}

struct CensusEntry {
  int n = 0;
  int m = 0;
  std::vector<std::string> members;  // graph6, canonical labeling
};

struct TheoremCheck {
  std::string id;
  std::string corpus;
  CheckStatus status = CheckStatus::Pass;
  std::vector<std::string> counterexamples;
  std::vector<std::string> unresolved;  // budget ran out on these
  std::vector<CensusEntry> census;
  std::vector<std::string> notes;
  double runtime_ms = 0;
};

// Graphs whose scfc equals m - offset.
enum class CensusClass { MinusTwo = 2, MinusThree = 3 };

inline std::optional<CensusClass> census_class_from_name(std::string_view name) {
  if (name == "m-2") return CensusClass::MinusTwo;
  if (name == "m-3") return CensusClass::MinusThree;
  return std::nullopt;
}

struct FamilyCensus {
  CensusClass cls = CensusClass::MinusTwo;
  std::map<std::pair<int, int>, std::set<CanonicalForm>> members;  // keyed by (n, m)
  std::vector<std::string> unresolved;

  bool contains(const Graph& g) const {
    auto it = members.find({g.order(), g.size()});
    return it != members.end() && it->second.count(canonical_form(g)) > 0;
  }
  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& [key, forms] : members) t += forms.size();
    return t;
  }
};

inline std::vector<CensusEntry> census_entries(const FamilyCensus& c) {
  std::vector<CensusEntry> out;
  for (const auto& [key, forms] : c.members) {
    CensusEntry e{key.first, key.second, {}};
    for (const auto& f : forms) e.members.push_back(write_graph6(graph_from_form(f)));
    out.push_back(std::move(e));
  }
  return out;
}

inline json check_to_json(const TheoremCheck& c) {
  json census = json::array();
  for (const auto& e : c.census) census.push_back({{"n", e.n}, {"m", e.m}, {"members", e.members}});
  return {{"id", c.id},
          {"corpus", c.corpus},
          {"status", std::string(to_string(c.status))},
          {"counterexamples", c.counterexamples},
          {"unresolved", c.unresolved},
          {"census", std::move(census)},
          {"notes", c.notes},
          {"runtime_ms", c.runtime_ms}};
}

struct RunOptions {
  int max_n = 0;              // 0 keeps each check's default bound
  std::uint64_t budget = 0;   // search nodes per solver call, 0 = unlimited
  unsigned workers = default_workers();
};

class Harness {
 public:
  explicit Harness(RunOptions options = {}) : options_(options) {}

  static const std::vector<std::string>& ids() {
    static const std::vector<std::string> kIds = {
        "T2.3",  "T2.3-star", "T2.6", "T2.7", "T2.9", "T2.10", "T3.2",  "T3.4",      "T4.1",     "T4.5",
        "T4.7",  "T4.8",      "T4.10", "T5.3", "T5.4", "T5.10", "T5.7", "T5.15", "LEMMA-5.1", "LEMMA-5.2"};
    return kIds;
  }

  TheoremCheck run(std::string_view id) {
    const auto start = std::chrono::steady_clock::now();
    TheoremCheck c;
    c.id = std::string(id);
    if (id == "T2.3") check_paths(c);
    else if (id == "T2.3-star") check_stars(c);
    else if (id == "T2.6") check_wheels(c);
    else if (id == "T2.7") check_bipartite(c);
    else if (id == "T2.9") check_critical_trees(c);
    else if (id == "T2.10") check_cycles(c);
    else if (id == "T3.2") check_structural(c);
    else if (id == "T3.4") check_triangle_packing(c);
    else if (id == "T4.1") check_complete(c);
    else if (id == "T4.5") check_value_m(c);
    else if (id == "T4.7") check_value_m_minus_1(c);
    else if (id == "T4.8") check_census_m_minus_2(c);
    else if (id == "T4.10") check_census_m_minus_3(c);
    else if (id == "T5.3") check_cubic_family(c, families::Family::Prism, 3, 8, {3, 4, 6});
    else if (id == "T5.4") check_cubic_family(c, families::Family::Mobius, 3, 8, {3, 4, 5, 6, 7});
    else if (id == "T5.10") check_cubic_family(c, families::Family::F0, 2, 5, {2, 4});
    else if (id == "T5.7") check_cubic_spc(c);
    else if (id == "T5.15") check_cubic_census(c);
    else if (id == "LEMMA-5.1" || id == "LEMMA-5.2") check_forced_paths(c);
    else throw Error(ErrorKind::UnknownTheorem, "unknown theorem id: " + std::string(id));
    finalize(c);
    c.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return c;
  }

  // scfc of g, or nullopt when the budget ran out. Resolved values are cached
  // by canonical form.
  std::optional<int> scfc(const Graph& g) {
    const CanonicalForm key = canonical_form(g);
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    SearchOptions o;
    o.node_budget = options_.budget;
    const ScfcResult r = scfc_exact(g, o);
    if (r.status == SearchStatus::Exhausted) return std::nullopt;
    std::lock_guard lock(mutex_);
    cache_.emplace(key, r.value);
    return r.value;
  }

  std::vector<std::optional<int>> scfc_all(const std::vector<Graph>& graphs) {
    std::vector<std::optional<int>> out(graphs.size());
    parallel_for(graphs.size(), [&](std::size_t i) { out[i] = scfc(graphs[i]); }, options_.workers);
    return out;
  }

  // Connected graphs with 2 <= n <= max_n.
  const std::vector<Graph>& connected_corpus(int max_n) {
    std::lock_guard lock(mutex_);
    auto& slot = connected_[max_n];
    if (slot.empty()) {
      for (int n = 2; n <= max_n; ++n) {
        auto c = enumerate_connected(n);
        slot.insert(slot.end(), c.graphs.begin(), c.graphs.end());
      }
    }
    return slot;
  }

  // Connected cubic graphs with 4 <= n <= max_n.
  const std::vector<Graph>& cubic_corpus(int max_n) {
    std::lock_guard lock(mutex_);
    auto& slot = cubic_[max_n];
    if (slot.empty()) {
      for (int n = 4; n <= max_n; n += 2) {
        auto c = enumerate_cubic(n);
        slot.insert(slot.end(), c.graphs.begin(), c.graphs.end());
      }
    }
    return slot;
  }

  FamilyCensus census(CensusClass cls, int max_n) {
    const auto& corpus = connected_corpus(max_n);
    const auto values = scfc_all(corpus);
    const int offset = static_cast<int>(cls);
    FamilyCensus out;
    out.cls = cls;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const Graph& g = corpus[i];
      if (!values[i]) {
        out.unresolved.push_back(write_graph6(g));
        continue;
      }
      if (*values[i] == g.size() - offset) out.members[{g.order(), g.size()}].insert(canonical_form(g));
    }
    return out;
  }

  // Connected cubic graphs on 4 <= n <= max_n with scfc exactly 2.
  FamilyCensus cubic_two_census(int max_n) {
    const auto& corpus = cubic_corpus(max_n);
    std::vector<std::optional<bool>> two(corpus.size());
    parallel_for(corpus.size(), [&](std::size_t i) { two[i] = is_scfc_two(corpus[i]); }, options_.workers);
    FamilyCensus out;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (!two[i]) {
        out.unresolved.push_back(write_graph6(corpus[i]));
      } else if (*two[i]) {
        out.members[{corpus[i].order(), corpus[i].size()}].insert(canonical_form(corpus[i]));
      }
    }
    return out;
  }

  // scfc(g) == 2, decided without computing the exact value.
  std::optional<bool> is_scfc_two(const Graph& g) const {
    if (g.order() < 2 || g.is_complete()) return false;
    const auto d = scfc_decide(g, 2, search_options());
    if (d.status == SearchStatus::Exhausted) return std::nullopt;
    return d.found();
  }

 private:
  SearchOptions search_options() const {
    SearchOptions o;
    o.node_budget = options_.budget;
    return o;
  }

  int bound(int fallback) const { return options_.max_n > 0 ? options_.max_n : fallback; }

  static void fail(TheoremCheck& c, const Graph& g, const std::string& why) {
    c.counterexamples.push_back(write_graph6(g));
    c.notes.push_back(write_graph6(g) + ": " + why);
  }

  static void finalize(TheoremCheck& c) {
    if (!c.counterexamples.empty()) c.status = CheckStatus::Fail;
    else if (!c.unresolved.empty()) c.status = CheckStatus::Partial;
    else c.status = CheckStatus::Pass;
  }

  // Compares scfc against `expected` for each parameter in [lo, hi].
  void check_formula(TheoremCheck& c, const std::string& family, int lo, int hi, const std::function<Graph(int)>& make,
                     const std::function<int(int)>& expected) {
    c.corpus = family + "(" + std::to_string(lo) + ".." + std::to_string(hi) + ")";
    std::vector<Graph> graphs;
    for (int p = lo; p <= hi; ++p) graphs.push_back(make(p));
    const auto values = scfc_all(graphs);
    for (int p = lo; p <= hi; ++p) {
      const auto& v = values[p - lo];
      const Graph& g = graphs[p - lo];
      if (!v) {
        c.unresolved.push_back(write_graph6(g));
      } else if (*v != expected(p)) {
        fail(c, g, family + "(" + std::to_string(p) + ") has scfc " + std::to_string(*v) + ", expected " +
                       std::to_string(expected(p)));
      }
    }
  }

  void check_paths(TheoremCheck& c) {
    check_formula(c, "path", 2, bound(12), families::path, [](int n) { return ceil_log2(n); });
  }

  void check_stars(TheoremCheck& c) {
    check_formula(c, "star", 1, bound(7), families::star, [](int m) { return m; });
  }

  void check_wheels(TheoremCheck& c) {
    check_formula(c, "wheel", 3, bound(7), families::wheel, [](int n) { return (n + 2) / 3; });
  }

  static int ceil_root(int t, int s) {
    int q = 1;
    auto power = [&](int base) {
      long long p = 1;
      for (int i = 0; i < s; ++i) p *= base;
      return p;
    };
    while (power(q) < t) ++q;
    return q;
  }

  void check_bipartite(TheoremCheck& c) {
    const int t_max = bound(5);
    c.corpus = "complete_bipartite(s<=2, s<=t<=" + std::to_string(t_max) + ")";
    std::vector<std::pair<int, int>> params;
    std::vector<Graph> graphs;
    for (int s = 1; s <= 2; ++s) {
      for (int t = s; t <= t_max; ++t) {
        params.emplace_back(s, t);
        graphs.push_back(families::complete_bipartite(s, t));
      }
    }
    const auto values = scfc_all(graphs);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const auto [s, t] = params[i];
      if (!values[i]) {
        c.unresolved.push_back(write_graph6(graphs[i]));
      } else if (*values[i] != ceil_root(t, s)) {
        fail(c, graphs[i], "K(" + std::to_string(s) + "," + std::to_string(t) + ") has scfc " + std::to_string(*values[i]));
      }
    }
  }

  // On trees cfc and scfc coincide, and subgraphs of trees are trees.
  void check_critical_trees(TheoremCheck& c) {
    const int k_max = bound(5);
    c.corpus = "q_k(2.." + std::to_string(k_max) + ") and connected proper subgraphs";
    for (int k = 2; k <= k_max; ++k) {
      const Graph q = families::q_k(k);
      const auto v = scfc(q);
      if (!v) {
        c.unresolved.push_back(write_graph6(q));
      } else if (*v != k) {
        fail(c, q, "q_k(" + std::to_string(k) + ") has cfc " + std::to_string(*v));
      }
      const auto subs = enumerate_connected_subgraphs(q).graphs;
      const auto values = scfc_all(subs);
      for (std::size_t i = 0; i < subs.size(); ++i) {
        if (subs[i].order() < 2) continue;
        if (!values[i]) {
          c.unresolved.push_back(write_graph6(subs[i]));
        } else if (*values[i] >= k) {
          fail(c, subs[i], "proper subgraph of q_k(" + std::to_string(k) + ") has cfc " + std::to_string(*values[i]));
        }
      }
    }
  }

  void check_cycles(TheoremCheck& c) {
    const int hi = bound(12);
    c.corpus = "cycle(3.." + std::to_string(hi) + ")";
    std::vector<Graph> graphs;
    for (int n = 3; n <= hi; ++n) graphs.push_back(families::cycle(n));
    const auto values = scfc_all(graphs);
    for (int n = 3; n <= hi; ++n) {
      const auto& v = values[n - 3];
      const Graph& g = graphs[n - 3];
      const int top = ceil_log2(n);
      if (!v) {
        c.unresolved.push_back(write_graph6(g));
      } else if (*v == top) {
        c.notes.push_back("n=" + std::to_string(n) + ": upper branch " + std::to_string(top));
      } else if (*v == top - 1) {
        c.notes.push_back("n=" + std::to_string(n) + ": lower branch " + std::to_string(top - 1));
      } else {
        fail(c, g, "cycle(" + std::to_string(n) + ") has scfc " + std::to_string(*v));
      }
    }
  }

  void check_structural(TheoremCheck& c) {
    const int max_n = bound(7);
    c.corpus = "connected(n<=" + std::to_string(max_n) + ")";
    const auto& corpus = connected_corpus(max_n);
    std::vector<int> verdict(corpus.size(), 0);  // 0 skipped, 1 ok, 2 two colors suffice, 3 unresolved
    parallel_for(
        corpus.size(),
        [&](std::size_t i) {
          if (!any_structural_condition(corpus[i])) return;
          const auto d = scfc_decide(corpus[i], 2, search_options());
          verdict[i] = d.status == SearchStatus::Exhausted ? 3 : d.found() ? 2 : 1;
        },
        options_.workers);
    int checked = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (verdict[i] != 0) ++checked;
      if (verdict[i] == 2) fail(c, corpus[i], "meets a structural condition but has a 2-coloring");
      if (verdict[i] == 3) c.unresolved.push_back(write_graph6(corpus[i]));
    }
    c.notes.push_back(std::to_string(checked) + " graphs meet at least one condition");
  }

  void check_triangle_packing(TheoremCheck& c) {
    const int max_n = bound(7);
    c.corpus = "connected(n<=" + std::to_string(max_n) + ", m>=2)";
    const auto& corpus = connected_corpus(max_n);
    const auto values = scfc_all(corpus);
    int equal = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const Graph& g = corpus[i];
      if (g.size() < 2) continue;
      if (!values[i]) {
        c.unresolved.push_back(write_graph6(g));
        continue;
      }
      const int t = max_edge_disjoint_triangles(g).size();
      const int cap = g.size() - 2 * t;
      const bool is_smt = is_isomorphic(g, families::star_plus_matching(g.size(), t));
      if (*values[i] > cap) fail(c, g, "scfc " + std::to_string(*values[i]) + " exceeds m-2t = " + std::to_string(cap));
      else if ((*values[i] == cap) != is_smt) fail(c, g, "equality with m-2t disagrees with star_plus_matching recognition");
      if (*values[i] == cap) ++equal;
    }
    c.notes.push_back(std::to_string(equal) + " graphs attain m-2t");
  }

  // Checks scfc == target(g) <=> member(g) over the connected corpus.
  void check_iff(TheoremCheck& c, const std::function<int(const Graph&)>& target,
                 const std::function<bool(const Graph&)>& member) {
    const int max_n = bound(7);
    c.corpus = "connected(n<=" + std::to_string(max_n) + ")";
    const auto& corpus = connected_corpus(max_n);
    const auto values = scfc_all(corpus);
    int members = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const Graph& g = corpus[i];
      if (!values[i]) {
        c.unresolved.push_back(write_graph6(g));
        continue;
      }
      const bool hits = *values[i] == target(g);
      const bool in = member(g);
      if (hits) ++members;
      if (hits != in) fail(c, g, hits ? "attains the value but is not in the family" : "in the family but scfc is " + std::to_string(*values[i]));
    }
    c.notes.push_back(std::to_string(members) + " graphs attain the value");
  }

  void check_complete(TheoremCheck& c) {
    check_iff(c, [](const Graph&) { return 1; }, [](const Graph& g) { return g.is_complete(); });
  }

  void check_value_m(TheoremCheck& c) {
    check_iff(c, [](const Graph& g) { return g.size(); },
              [](const Graph& g) { return g.order() == g.size() + 1 && is_isomorphic(g, families::star(g.size())); });
  }

  // Paths are named by vertex count; gamma(3) is path(4).
  void check_value_m_minus_1(TheoremCheck& c) {
    check_iff(c, [](const Graph& g) { return g.size() - 1; },
              [](const Graph& g) {
                if (g.order() != g.size() + 1) return false;
                if (is_isomorphic(g, families::path(4)) || is_isomorphic(g, families::path(5))) return true;
                return g.size() >= 3 && is_isomorphic(g, families::gamma(g.size()));
              });
  }

  // Text-named candidates for the m-2 class: paths, cycles, stars, gammas
  // and complete graphs up to max_n vertices.
  static std::set<CanonicalForm> named_candidates(int max_n) {
    std::set<CanonicalForm> out;
    for (int n = 2; n <= max_n; ++n) {
      out.insert(canonical_form(families::path(n)));
      out.insert(canonical_form(families::complete(n)));
      out.insert(canonical_form(families::star(n - 1)));
      if (n >= 3) out.insert(canonical_form(families::cycle(n)));
      if (n >= 4) out.insert(canonical_form(families::gamma(n - 1)));
    }
    return out;
  }

  void check_census_m_minus_2(TheoremCheck& c) {
    const int max_n = bound(7);
    c.corpus = "connected(n<=" + std::to_string(max_n) + "), verified up to n <= " + std::to_string(max_n);
    const FamilyCensus census = this->census(CensusClass::MinusTwo, max_n);
    c.unresolved = census.unresolved;
    c.census = census_entries(census);

    std::set<CanonicalForm> expected;
    for (int n = 3; n <= std::min(5, max_n); ++n) expected.insert(canonical_form(families::cycle(n)));
    if (max_n >= 6) expected.insert(canonical_form(families::path(6)));

    const auto named = named_candidates(max_n);
    std::set<CanonicalForm> found;
    std::size_t remainder = 0;
    for (const auto& [key, forms] : census.members) {
      for (const auto& f : forms) {
        if (named.count(f)) found.insert(f);
        else ++remainder;
      }
    }
    for (const auto& f : found) {
      if (!expected.count(f)) fail(c, graph_from_form(f), "named graph in the m-2 census");
    }
    for (const auto& f : expected) {
      if (!found.count(f) && census.unresolved.empty()) fail(c, graph_from_form(f), "named graph missing from the m-2 census");
    }
    c.notes.push_back(std::to_string(found.size()) + " named members, " + std::to_string(remainder) +
                      " further members reported for comparison");
  }

  void check_census_m_minus_3(TheoremCheck& c) {
    const int max_n = bound(7);
    c.corpus = "connected(n<=" + std::to_string(max_n) + ", m>=4), verified up to n <= " + std::to_string(max_n);
    FamilyCensus three = census(CensusClass::MinusThree, max_n);
    for (auto it = three.members.begin(); it != three.members.end();) {
      it = it->first.second < 4 ? three.members.erase(it) : std::next(it);
    }
    const FamilyCensus two = census(CensusClass::MinusTwo, max_n);
    c.unresolved = three.unresolved;
    c.census = census_entries(three);
    for (const auto& [key, forms] : three.members) {
      auto other = two.members.find(key);
      if (other == two.members.end()) continue;
      for (const auto& f : forms) {
        if (other->second.count(f)) fail(c, graph_from_form(f), "in both the m-2 and m-3 censuses");
      }
    }
    c.notes.push_back(std::to_string(three.total()) + " members reported for comparison");
  }

  static Graph make_cubic(families::Family f, int k) { return families::generate({f, {k}}); }

  void check_cubic_family(TheoremCheck& c, families::Family f, int lo, int default_hi, std::set<int> yes) {
    const int hi = bound(default_hi);
    const std::string name = f == families::Family::Prism ? "prism" : f == families::Family::Mobius ? "mobius" : "f0";
    c.corpus = name + "(" + std::to_string(lo) + ".." + std::to_string(hi) + ")";
    std::vector<Graph> graphs;
    for (int k = lo; k <= hi; ++k) graphs.push_back(make_cubic(f, k));
    std::vector<std::optional<bool>> two(graphs.size());
    parallel_for(graphs.size(), [&](std::size_t i) { two[i] = is_scfc_two(graphs[i]); }, options_.workers);
    for (int k = lo; k <= hi; ++k) {
      const auto& v = two[k - lo];
      if (!v) {
        c.unresolved.push_back(write_graph6(graphs[k - lo]));
      } else if (*v != (yes.count(k) > 0)) {
        fail(c, graphs[k - lo], name + "(" + std::to_string(k) + ") scfc=2 is " + (*v ? "true" : "false"));
      }
    }
  }

  void check_cubic_spc(TheoremCheck& c) {
    const int max_n = bound(12);
    c.corpus = "cubic(n<=" + std::to_string(max_n) + ")";
    const auto& corpus = cubic_corpus(max_n);
    std::vector<int> verdict(corpus.size(), 0);  // 0 not scfc 2, 1 spc 2, 2 exception, 3 unresolved
    parallel_for(
        corpus.size(),
        [&](std::size_t i) {
          const auto two = is_scfc_two(corpus[i]);
          if (!two) {
            verdict[i] = 3;
            return;
          }
          if (!*two) return;
          const auto d = spc_decide(corpus[i], 2, search_options());
          verdict[i] = d.status == SearchStatus::Exhausted ? 3 : d.found() ? 1 : 2;
        },
        options_.workers);
    std::vector<std::string> exceptions;
    int with_two = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (verdict[i] == 1 || verdict[i] == 2) ++with_two;
      if (verdict[i] == 2) exceptions.push_back(write_graph6(corpus[i]));
      if (verdict[i] == 3) c.unresolved.push_back(write_graph6(corpus[i]));
    }
    c.notes.push_back(std::to_string(with_two) + " cubic graphs have scfc 2");
    if (exceptions.size() == 1) c.notes.push_back("exceptional class: " + exceptions.front());
    if (exceptions.size() > 1) {
      for (const auto& e : exceptions) {
        c.counterexamples.push_back(e);
        c.notes.push_back(e + ": scfc 2 without spc 2");
      }
    }
  }

  void check_cubic_census(TheoremCheck& c) {
    const int max_n = bound(12);
    c.corpus = "cubic(n<=" + std::to_string(max_n) + ")";
    const FamilyCensus census = cubic_two_census(max_n);
    c.unresolved = census.unresolved;
    c.census = census_entries(census);
    struct Named {
      std::string name;
      Graph g;
      bool expected;
    };
    std::vector<Named> named;
    for (int k = 3; 2 * k <= max_n; ++k) {
      named.push_back({"prism(" + std::to_string(k) + ")", families::prism(k), k == 3 || k == 4 || k == 6});
      named.push_back({"mobius(" + std::to_string(k) + ")", families::mobius(k), k <= 7});
    }
    for (int k = 2; 2 * k + 2 <= max_n; ++k) {
      named.push_back({"f0(" + std::to_string(k) + ")", families::f0(k), k == 2 || k == 4});
    }
    std::set<CanonicalForm> named_forms;
    for (const auto& item : named) {
      named_forms.insert(canonical_form(item.g));
      const bool in = census.contains(item.g);
      if (in != item.expected && census.unresolved.empty()) {
        fail(c, item.g, item.name + (in ? " is in the census" : " is missing from the census"));
      }
    }
    std::size_t remainder = 0;
    for (const auto& [key, forms] : census.members) {
      for (const auto& f : forms) remainder += named_forms.count(f) ? 0 : 1;
    }
    c.notes.push_back(std::to_string(census.total()) + " members, " + std::to_string(remainder) +
                      " outside the named families");
  }

  // Every valid 2-coloring gives the two edges of a forced 2-path different
  // colors; consequently a graph with an odd forced cycle has no 2-coloring.
  void check_forced_paths(TheoremCheck& c) {
    const int max_n = bound(7);
    c.corpus = "connected(n<=" + std::to_string(max_n) + ") plus prism/mobius/f0 up to 16 vertices";
    std::vector<Graph> corpus = connected_corpus(max_n);
    for (int k = 3; k <= 8; ++k) {
      corpus.push_back(families::prism(k));
      corpus.push_back(families::mobius(k));
    }
    for (int k = 2; k <= 7; ++k) corpus.push_back(families::f0(k));

    // 0 skipped, 1 ok, 2 equal colors on a forced 2-path, 3 odd forced cycle colored, 4 unresolved
    std::vector<int> verdict(corpus.size(), 0);
    std::vector<std::uint64_t> colorings(corpus.size(), 0);
    parallel_for(
        corpus.size(),
        [&](std::size_t i) {
          const Graph& g = corpus[i];
          const auto paths = forced_2paths(g);
          if (paths.empty() || g.is_complete()) return;
          bool odd = false;
          for (const auto& cyc : forced_cycles(g)) odd = odd || !cyc.even;
          SearchOptions o = search_options();
          o.forced_path_filter = false;
          int v = 1;
          const auto r = for_each_coloring(g, 2, Acceptance::StrongCfc, o, [&](const EdgeColoring& col) {
            ++colorings[i];
            if (odd) v = 3;
            for (const auto& p : paths) {
              if (col.color(*g.edge_id(p[0], p[1])) == col.color(*g.edge_id(p[1], p[2]))) v = 2;
            }
            return v == 1;
          });
          verdict[i] = r.status == SearchStatus::Exhausted && v == 1 ? 4 : v;
        },
        options_.workers);
    int checked = 0;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (verdict[i] != 0) ++checked;
      total += colorings[i];
      if (verdict[i] == 2) fail(c, corpus[i], "a valid 2-coloring repeats a color on a forced 2-path");
      if (verdict[i] == 3) fail(c, corpus[i], "a graph with an odd forced cycle has a valid 2-coloring");
      if (verdict[i] == 4) c.unresolved.push_back(write_graph6(corpus[i]));
    }
    c.notes.push_back(std::to_string(checked) + " graphs with forced 2-paths, " + std::to_string(total) +
                      " valid 2-colorings inspected");
  }

  RunOptions options_;
  std::mutex mutex_;
  std::map<CanonicalForm, int> cache_;
  std::map<int, std::vector<Graph>> connected_;
  std::map<int, std::vector<Graph>> cubic_;
};

}  // namespace scfc::harness

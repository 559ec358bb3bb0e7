#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "scfc/coloring.hpp"
#include "scfc/solver.hpp"

namespace scfc {

using json = nlohmann::json;

// {"k": int, "edges": [[u, v, color], ...]} with 1-based colors.
inline json coloring_to_json(const Graph& g, const EdgeColoring& c) {
  require_matches(g, c);
  json edges = json::array();
  for (int i = 0; i < g.size(); ++i) {
    const auto& e = g.edges()[i];
    edges.push_back({e.u, e.v, c.colors()[i]});
  }
  return {{"k", c.k()}, {"edges", std::move(edges)}};
}

inline EdgeColoring coloring_from_json(const Graph& g, const json& j) {
  try {
    const int k = j.at("k").get<int>();
    std::vector<int> colors(g.size(), 0);
    for (const auto& item : j.at("edges")) {
      if (!item.is_array() || item.size() != 3) throw Error(ErrorKind::MalformedColoring, "edge entry must be [u, v, color]");
      const int u = item[0].get<int>();
      const int v = item[1].get<int>();
      const int color = item[2].get<int>();
      auto e = g.edge_id(u, v);
      if (!e) throw Error(ErrorKind::MalformedColoring, "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
      if (colors[e->index] != 0) throw Error(ErrorKind::MalformedColoring, "edge colored twice");
      colors[e->index] = color;
    }
    for (int c : colors) {
      if (c == 0) throw Error(ErrorKind::MalformedColoring, "some edge has no color");
    }
    return EdgeColoring(k, std::move(colors));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::MalformedColoring, e.what());
  }
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::MalformedColoring, path + ": " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path);
  out << text;
}

inline json report_to_json(const VerificationReport& r) {
  json j{{"ok", r.ok}};
  if (r.failing_pair) j["failing_pair"] = {r.failing_pair->first, r.failing_pair->second};
  if (r.witness_path) j["witness_path"] = *r.witness_path;
  return j;
}

inline json trace_to_json(const BoundTrace& t) {
  return {{"lower", {{"value", t.lower.value}, {"reason", std::string(to_string(t.lower.reason))}}},
          {"upper", {{"value", t.upper.value}, {"reason", std::string(to_string(t.upper.reason))}}},
          {"lower_bound_violated", t.lower_bound_violated}};
}

inline json scfc_result_to_json(const Graph& g, const ScfcResult& r) {
  json j{{"status", std::string(to_string(r.status))},
         {"value", r.value},
         {"trace", trace_to_json(r.trace)},
         {"nodes", r.nodes}};
  j["witness"] = r.status == SearchStatus::Exhausted ? json() : coloring_to_json(g, r.witness);
  return j;
}

inline json decide_result_to_json(const Graph& g, const DecideResult& r) {
  json j{{"status", std::string(to_string(r.status))}, {"nodes", r.nodes}};
  j["witness"] = r.witness ? coloring_to_json(g, *r.witness) : json();
  return j;
}

}  // namespace scfc

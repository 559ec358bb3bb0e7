#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scfc/scfc.hpp"

namespace {

using scfc::json;

// Exit status for malformed input and other library errors; 0-2 belong to
// the theorem contract.
constexpr int kErrorExit = 3;

scfc::Graph graph_arg(const std::string& text) { return scfc::parse_graph6(text); }

void emit_graph(const scfc::Graph& g, const std::string& format) {
  if (format == "edgelist") std::cout << scfc::write_edge_list(g);
  else std::cout << scfc::write_graph6(g) << '\n';
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strong conflict-free connection number toolkit"};
  app.require_subcommand(1);

  std::string name;
  std::vector<int> params;
  std::string emit = "graph6";
  std::string graph6;
  std::string coloring_path;
  std::string out_path;
  std::uint64_t budget = 0;
  int k = 0;
  int n = 0;
  bool cubic = false;
  int max_n = 0;
  std::string json_path;
  std::string census_class = "m-2";
  unsigned workers = scfc::default_workers();

  auto* family = app.add_subcommand("family", "Generate a named graph family member");
  family->add_option("name", name, "path, cycle, star, smt, gamma, complete, kst, wheel, qk, ladder, prism, mobius, f0")
      ->required();
  family->add_option("--params", params, "Family parameters")->required();
  family->add_option("--emit", emit, "Output format")->check(CLI::IsMember({"graph6", "edgelist"}));

  auto* color = app.add_subcommand("color", "Build a constructive coloring and write it as JSON");
  color->add_option("construction", name,
                    "ruler_path, cycle, star, triangle_packing, smt, kst, prism, mobius, f0, gamma")
      ->required();
  color->add_option("--params", params, "Construction parameters")->required();
  color->add_option("--out", out_path, "Coloring JSON file (stdout when omitted)");

  auto* verify = app.add_subcommand("verify", "Check a coloring for strong conflict-free connection");
  verify->add_option("--graph", graph6, "Graph in graph6")->required();
  verify->add_option("--coloring", coloring_path, "Coloring JSON file")->required();

  auto* compute = app.add_subcommand("compute", "Compute scfc exactly");
  compute->add_option("--graph6", graph6, "Graph in graph6")->required();
  compute->add_option("--budget", budget, "Search node budget (0 = unlimited)");

  auto* decide = app.add_subcommand("decide", "Decide whether k colors suffice");
  decide->add_option("--k", k, "Number of colors")->required()->check(CLI::Range(1, 31));
  decide->add_option("--graph6", graph6, "Graph in graph6")->required();
  decide->add_option("--budget", budget, "Search node budget (0 = unlimited)");

  auto* enumerate = app.add_subcommand("enumerate", "List connected graphs up to isomorphism");
  enumerate->add_option("--n", n, "Order")->required();
  enumerate->add_flag("--cubic", cubic, "Connected cubic graphs only");
  enumerate->add_option("--emit", emit, "Output format")->check(CLI::IsMember({"graph6"}));

  auto* theorem = app.add_subcommand("theorem", "Run a registered theorem check (or 'all')");
  theorem->add_option("id", name, "Theorem id")->required();
  theorem->add_option("--max-n", max_n, "Corpus or parameter bound (0 = default)");
  theorem->add_option("--budget", budget, "Search node budget per solver call");
  theorem->add_option("--json", json_path, "Write the report here");
  theorem->add_option("--workers", workers, "Worker threads");

  auto* census = app.add_subcommand("census", "List connected graphs with scfc = m-2 or m-3");
  census->add_option("--class", census_class, "m-2 or m-3")->check(CLI::IsMember({"m-2", "m-3"}));
  census->add_option("--max-n", max_n, "Largest order")->required();
  census->add_option("--budget", budget, "Search node budget per solver call");
  census->add_option("--json", json_path, "Write the census here");
  census->add_option("--workers", workers, "Worker threads");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*family) {
      auto f = scfc::families::family_from_name(name);
      if (!f) throw scfc::Error(scfc::ErrorKind::InvalidParams, "unknown family " + name);
      emit_graph(scfc::families::generate({*f, params}), emit);
      return 0;
    }
    if (*color) {
      auto c = scfc::constructions::construction_from_name(name);
      if (!c) throw scfc::Error(scfc::ErrorKind::InvalidParams, "unknown construction " + name);
      const auto r = scfc::constructions::build(*c, params);
      const json j = scfc::coloring_to_json(r.graph, r.coloring);
      if (out_path.empty()) {
        print_json(j);
      } else {
        scfc::write_text_file(out_path, j.dump(2) + "\n");
      }
      std::cerr << scfc::write_graph6(r.graph) << " colors=" << r.coloring.used_colors()
                << " ok=" << (r.report.ok ? "true" : "false") << '\n';
      return r.report.ok ? 0 : 1;
    }
    if (*verify) {
      const auto g = graph_arg(graph6);
      const auto c = scfc::coloring_from_json(g, scfc::read_json_file(coloring_path));
      const auto report = scfc::is_strong_cfc(g, c);
      print_json(scfc::report_to_json(report));
      return report.ok ? 0 : 1;
    }
    if (*compute) {
      const auto g = graph_arg(graph6);
      scfc::SearchOptions o;
      o.node_budget = budget;
      const auto r = scfc::scfc_exact(g, o);
      print_json(scfc::scfc_result_to_json(g, r));
      return r.status == scfc::SearchStatus::Exhausted ? 2 : 0;
    }
    if (*decide) {
      const auto g = graph_arg(graph6);
      scfc::SearchOptions o;
      o.node_budget = budget;
      const auto r = scfc::scfc_decide(g, k, o);
      print_json(scfc::decide_result_to_json(g, r));
      return r.status == scfc::SearchStatus::Exhausted ? 2 : r.found() ? 0 : 1;
    }
    if (*enumerate) {
      const auto corpus = cubic ? scfc::enumerate_cubic(n) : scfc::enumerate_connected(n);
      std::cout << scfc::write_graph6_lines(corpus);
      return 0;
    }
    if (*theorem) {
      scfc::harness::Harness h({max_n, budget, workers});
      std::vector<std::string> ids;
      if (name == "all") ids = scfc::harness::Harness::ids();
      else ids.push_back(name);
      json reports = json::array();
      std::vector<scfc::harness::CheckStatus> statuses;
      for (const auto& id : ids) {
        const auto c = h.run(id);
        statuses.push_back(c.status);
        std::cout << c.id << ' ' << to_string(c.status) << " [" << c.corpus << "] " << c.runtime_ms << " ms\n";
        for (const auto& note : c.notes) std::cout << "  " << note << '\n';
        reports.push_back(scfc::harness::check_to_json(c));
      }
      if (!json_path.empty()) {
        scfc::write_text_file(json_path, (reports.size() == 1 ? reports[0] : reports).dump(2) + "\n");
      }
      return scfc::harness::exit_code(statuses);
    }
    if (*census) {
      scfc::harness::Harness h({max_n, budget, workers});
      const auto cls = *scfc::harness::census_class_from_name(census_class);
      const auto c = h.census(cls, max_n);
      const auto entries = scfc::harness::census_entries(c);
      json out = json::array();
      for (const auto& e : entries) {
        for (const auto& g : e.members) std::cout << e.n << ' ' << e.m << ' ' << g << '\n';
        out.push_back({{"n", e.n}, {"m", e.m}, {"members", e.members}});
      }
      for (const auto& g : c.unresolved) std::cout << "unresolved " << g << '\n';
      if (!json_path.empty()) {
        scfc::write_text_file(json_path, json{{"class", census_class}, {"max_n", max_n}, {"census", out},
                                              {"unresolved", c.unresolved}}
                                             .dump(2) + "\n");
      }
      return c.unresolved.empty() ? 0 : 2;
    }
  } catch (const scfc::Error& e) {
    std::cerr << "error (" << scfc::to_string(e.kind()) << "): " << e.what() << '\n';
    return kErrorExit;
  }
  return 0;
}

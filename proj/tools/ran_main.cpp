#include <algorithm>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ran/classify.hpp"
#include "ran/clique_tree.hpp"
#include "ran/dot_export.hpp"
#include "ran/errors.hpp"
#include "ran/experiment.hpp"
#include "ran/fixtures.hpp"
#include "ran/generators.hpp"
#include "ran/graph.hpp"
#include "ran/hamilton.hpp"
#include "ran/json_io.hpp"
#include "ran/toughness.hpp"

namespace {

using nlohmann::json;
using namespace ran;

std::string trace_path_for(std::string out) {
  const std::string suffix = ".json";
  if (out.size() > suffix.size() &&
      out.compare(out.size() - suffix.size(), suffix.size(), suffix) == 0)
    out.resize(out.size() - suffix.size());
  return out + ".trace.json";
}

void warn_if_raised(const char* what, int cap, int default_cap) {
  if (cap > default_cap)
    std::cerr << "warning: " << what << " cap raised to " << cap
              << "; runtime grows exponentially with n\n";
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json witness_path_json(const NeatPath& p) {
  json w;
  w["endpoints"] = {p.endpoint_a, p.endpoint_b};
  w["internal_nodes"] = p.internal_nodes;
  w["kind"] = p.kind == PathKind::Fat ? "fat" : "slim";
  w["endpoint_intersection"] = p.endpoint_intersection;
  return w;
}

json classify_report(const Graph& g) {
  const ClassLabel cl = classify(g);
  json j;
  j["label"] = to_string(cl.label);
  j["n"] = cl.n;
  j["simplicial_count"] = cl.simplicial_count;
  if (cl.ell >= 0) j["ell"] = cl.ell;
  if (!cl.degree4_nodes.empty()) j["degree4_nodes"] = cl.degree4_nodes;
  if (cl.witness_path) j["witness_path"] = witness_path_json(*cl.witness_path);
  if (cl.witness_case) {
    switch (*cl.witness_case) {
      case SlimWitnessCase::A: j["witness_case"] = "A"; break;
      case SlimWitnessCase::B: j["witness_case"] = "B"; break;
      case SlimWitnessCase::C: j["witness_case"] = "C"; break;
    }
  }
  if (!cl.witness_cliques.empty()) j["witness_cliques"] = cl.witness_cliques;
  return j;
}

json analyze_report(const Graph& g) {
  if (!is_ran(g)) throw not_a_ran_error("analyze needs a RAN input");
  const CliqueTree t = build_clique_tree(g);
  const ClassLabel cl = classify(g, t);
  const CheckReport checks = class_cardinality_checks(cl, g);
  const SeparatorMultiset seps = minimal_separators(t);
  const DegreeProfile prof = tree_degree_profile(t);

  json j;
  if (!g.name().empty()) j["name"] = g.name();
  j["n"] = g.vertex_count();
  j["edges"] = g.edge_count();
  j["label"] = to_string(cl.label);
  if (cl.ell >= 0) j["ell"] = cl.ell;
  j["simplicial_count"] = cl.simplicial_count;

  json tree;
  tree["nodes"] = t.node_count();
  tree["edges"] = t.edge_count();
  tree["leaves"] = t.leaf_count();
  json degs = json::object();
  for (auto [d, c] : prof.count_by_degree) degs[std::to_string(d)] = c;
  tree["degree_profile"] = degs;
  json hubs = json::array();
  for (int node : prof.degree4_nodes) hubs.push_back(t.clique(node));
  tree["degree4_cliques"] = hubs;
  j["clique_tree"] = tree;

  json sep;
  sep["distinct"] = seps.multiplicity.size();
  sep["total"] = seps.edge_total;
  int maxmu = 0;
  for (const auto& [s, mu] : seps.multiplicity) maxmu = std::max(maxmu, mu);
  sep["max_multiplicity"] = maxmu;
  j["separators"] = sep;

  const TripleIntersectionReport tir = triple_intersection_report(t);
  if (!tir.empty()) {
    json triples = json::array();
    for (const auto& tr : tir.triples) {
      json e;
      e["cliques"] = {tr.a, tr.b, tr.c};
      e["vertices"] = tr.shared;
      e["size"] = tr.shared.size();
      triples.push_back(e);
    }
    j["triple_intersections"] = triples;
  }
  j["cardinality_checks_ok"] = checks.all_ok();
  return j;
}

json clique_tree_report(const CliqueTree& t) {
  json j;
  json nodes = json::array();
  for (const Clique& c : t.cliques()) nodes.push_back(c);
  j["nodes"] = nodes;
  json edges = json::array();
  for (const CliqueTreeEdge& e : t.edges()) {
    json je;
    je["a"] = e.a;
    je["b"] = e.b;
    je["separator"] = e.separator;
    edges.push_back(je);
  }
  j["edges"] = edges;
  j["leaves"] = t.leaf_count();
  j["canonical_form"] = tree_canonical_form(t);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random Apollonian network toolkit: generation, clique trees, "
               "classification, exact toughness and Hamiltonicity"};
  app.require_subcommand(1);

  // gen
  int gen_n = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "generate a random Apollonian network");
  gen->add_option("--n", gen_n, "vertex count (>= 4)")->required();
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--out", gen_out, "graph JSON path; the insertion trace lands beside it");
  gen->callback([&] {
    const GeneratedRan r = generate_ran(gen_n, gen_seed);
    if (gen_out.empty()) {
      json j;
      j["graph"] = json::parse(graph_to_json(r.graph));
      j["trace"] = json::parse(trace_to_json(r.trace));
      emit(j);
    } else {
      write_file(gen_out, graph_to_json(r.graph));
      write_file(trace_path_for(gen_out), trace_to_json(r.trace));
    }
  });

  // analyze
  std::string analyze_path;
  auto* analyze = app.add_subcommand("analyze", "full report: class, clique tree, separators");
  analyze->add_option("graph", analyze_path, "graph JSON file")->required();
  analyze->callback([&] { emit(analyze_report(load_graph_file(analyze_path))); });

  // classify
  std::string classify_path;
  auto* cls = app.add_subcommand("classify", "class label with its witness data");
  cls->add_option("graph", classify_path, "graph JSON file")->required();
  cls->callback([&] { emit(classify_report(load_graph_file(classify_path))); });

  // toughness
  std::string tough_path;
  int tough_cap = kToughnessCap;
  bool bounds_only = false;
  auto* tough = app.add_subcommand("toughness", "exact toughness by exhaustive cut search");
  tough->add_option("graph", tough_path, "graph JSON file")->required();
  tough->add_option("--cap", tough_cap, "vertex cap for the exhaustive search");
  tough->add_flag("--bounds-only", bounds_only, "report the class interval instead of searching");
  tough->callback([&] {
    warn_if_raised("toughness", tough_cap, kToughnessCap);
    const Graph g = load_graph_file(tough_path);
    json j;
    if (bounds_only) {
      const ClassLabel cl = classify(g);
      j["label"] = to_string(cl.label);
      if (cl.label == Label::Complete) {
        j["tau"] = "inf";
      } else {
        const ToughnessInterval iv = class_toughness(cl.label, cl.n);
        j["lower"] = iv.lower.str();
        j["upper"] = iv.upper.str();
        j["exact"] = iv.exact;
        j["upper_strict"] = iv.upper_strict;
        j["unknown"] = iv.unknown;
      }
    } else {
      const ToughnessResult r = toughness_exact(g, tough_cap);
      j["tau"] = r.value.str();
      j["witness"] = r.witness.to_vector();
      j["omega"] = r.components;
    }
    emit(j);
  });

  // hamilton
  std::string ham_path;
  int ham_cap = kHamiltonCap;
  bool want_mop = false;
  auto* ham = app.add_subcommand("hamilton", "exact Hamiltonian cycle decision");
  ham->add_option("graph", ham_path, "graph JSON file")->required();
  ham->add_option("--cap", ham_cap, "vertex cap for the backtracking search");
  ham->add_flag("--mop", want_mop, "also build the spanning mop (C5 inputs)");
  ham->callback([&] {
    warn_if_raised("Hamiltonicity", ham_cap, kHamiltonCap);
    const Graph g = load_graph_file(ham_path);
    const HamiltonResult r = hamiltonian_cycle(g, ham_cap);
    json j;
    j["hamiltonian"] = r.decision == Hamiltonicity::Hamiltonian;
    if (r.decision == Hamiltonicity::Hamiltonian) j["cycle"] = r.cycle;
    if (want_mop) {
      const Mop m = build_spanning_mop_c5(g);
      json mj;
      json edges = json::array();
      for (auto [u, v] : m.edges) edges.push_back({u, v});
      mj["edges"] = edges;
      mj["boundary"] = m.boundary;
      j["mop"] = mj;
    }
    emit(j);
  });

  // clique-tree
  std::string tree_path, tree_dot;
  auto* tree = app.add_subcommand("clique-tree", "maximal cliques, separators, canonical form");
  tree->add_option("graph", tree_path, "graph JSON file")->required();
  tree->add_option("--dot", tree_dot, "also write the tree as DOT to this path");
  tree->callback([&] {
    const Graph g = load_graph_file(tree_path);
    const CliqueTree t = build_clique_tree(g);
    if (!tree_dot.empty()) write_file(tree_dot, clique_tree_to_dot(t));
    emit(clique_tree_report(t));
  });

  // export-dot
  std::string dot_in, dot_out;
  bool dot_tree = false;
  auto* dot = app.add_subcommand("export-dot", "write the graph (or its clique tree) as DOT");
  dot->add_option("graph", dot_in, "graph JSON file")->required();
  dot->add_option("--out", dot_out, "DOT output path")->required();
  dot->add_flag("--clique-tree", dot_tree, "export the clique tree instead of the graph");
  dot->callback([&] {
    const Graph g = load_graph_file(dot_in);
    write_file(dot_out, dot_tree ? clique_tree_to_dot(build_clique_tree(g)) : graph_to_dot(g));
  });

  // experiment c8
  auto* exp = app.add_subcommand("experiment", "batch studies");
  exp->require_subcommand(1);
  ExperimentParams params;
  std::string exp_out;
  auto* c8 = exp->add_subcommand("c8", "sample RANs, record C8 toughness and Hamiltonicity");
  c8->add_option("--n-max", params.n_max, "largest sampled vertex count (>= 12)");
  c8->add_option("--samples", params.samples, "number of random RANs to draw");
  c8->add_option("--seed", params.seed, "base seed; sample i uses seed + i");
  c8->add_option("--cap", params.toughness_cap, "toughness vertex cap");
  c8->add_option("--out", exp_out, "CSV path; stdout when omitted");
  c8->callback([&] {
    warn_if_raised("toughness", params.toughness_cap, kToughnessCap);
    const ExperimentResult r = run_c8_experiment(params);
    if (exp_out.empty()) {
      std::cout << r.csv();
      std::cerr << r.summary();
    } else {
      write_file(exp_out, r.csv());
      std::cout << r.summary();
    }
  });

  // fixtures
  auto* fx = app.add_subcommand("fixtures", "built-in graphs from the literature");
  fx->require_subcommand(1);
  auto* fx_list = fx->add_subcommand("list", "name, size and expectations of every fixture");
  fx_list->callback([&] {
    json arr = json::array();
    for (const Fixture& f : fixture_catalog()) {
      json j;
      j["name"] = f.name;
      j["n"] = int(f.trace.steps.size()) + 3;
      j["label"] = to_string(f.expected_label);
      j["toughness"] = f.expected_toughness ? json(f.expected_toughness->str()) : json(nullptr);
      j["hamiltonian"] = f.expected_hamiltonian ? json(*f.expected_hamiltonian) : json(nullptr);
      arr.push_back(j);
    }
    emit(arr);
  });
  std::string fx_name, fx_out;
  auto* fx_dump = fx->add_subcommand("dump", "write one fixture as graph JSON");
  fx_dump->add_option("name", fx_name, "fixture name (see `fixtures list`)")->required();
  fx_dump->add_option("--out", fx_out, "output path; stdout when omitted");
  fx_dump->callback([&] {
    const Fixture* f = find_fixture(fx_name);
    if (!f) throw validation_error("unknown fixture: " + fx_name);
    const std::string text = graph_to_json(f->graph());
    if (fx_out.empty()) std::cout << text;
    else write_file(fx_out, text);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const cap_exceeded_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const not_a_ran_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const theorem_violation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

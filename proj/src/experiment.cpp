#include "ran/experiment.hpp"

#include <chrono>
#include <sstream>

#include "ran/clique_tree.hpp"
#include "ran/errors.hpp"
#include "ran/fixtures.hpp"
#include "ran/generators.hpp"

namespace ran {

namespace {

constexpr const char* kCsvHeader =
    "seed,n,label,toughness,hamiltonian,degree4_nodes,triple_intersections,runtime_ms";

}  // namespace

std::string ExperimentResult::csv() const {
  std::ostringstream out;
  out << kCsvHeader << "\n";
  for (const ExperimentRecord& r : records) {
    out << r.source << "," << r.n << "," << to_string(r.label) << "," << r.toughness << ","
        << to_string(r.hamiltonian) << "," << r.degree4_count << "," << r.triple_sizes << ","
        << r.runtime_ms << "\n";
  }
  return out.str();
}

std::string ExperimentResult::summary() const {
  int computed = 0;
  for (const ExperimentRecord& r : records)
    if (r.toughness != "skipped") ++computed;
  std::ostringstream out;
  out << "c8 study: drew " << generated << " random graphs, " << records.size()
      << " landed in C8 (" << computed << " with exact toughness)\n";
  for (const std::string& c : counterexamples) out << "counterexample: " << c << "\n";
  if (counterexamples.empty()) {
    out << "every computed C8 toughness equals 1 on this sample; that is evidence, not proof\n";
  } else {
    out << counterexamples.size() << " C8 graph(s) with toughness != 1 found; see lines above\n";
  }
  return out.str();
}

ExperimentResult run_c8_experiment(const ExperimentParams& p) {
  if (p.n_max < 12) throw validation_error("C8 graphs need at least 12 vertices");
  if (p.n_max > p.toughness_cap)
    throw validation_error("n_max exceeds the toughness cap; raise --cap or lower --n-max");
  if (p.samples < 0) throw validation_error("negative sample count");

  ExperimentResult result;
  result.params = p;

  auto consider = [&](const std::string& source, const Graph& g) {
    if (!is_ran(g)) throw theorem_violation("experiment input " + source + " is not a RAN");
    const CliqueTree t = build_clique_tree(g);
    const ClassLabel cl = classify(g, t);
    if (cl.label != Label::C8) return;
    const auto t0 = std::chrono::steady_clock::now();
    ExperimentRecord rec;
    rec.source = source;
    rec.n = g.vertex_count();
    rec.label = cl.label;
    if (rec.n <= p.toughness_cap) {
      const Rational tau = toughness_exact(g, p.toughness_cap).value;
      rec.toughness = tau.str();
      if (tau != Rational(1))
        result.counterexamples.push_back(source + " n=" + std::to_string(rec.n) +
                                         " tau=" + tau.str());
    } else {
      rec.toughness = "skipped";
    }
    rec.hamiltonian = hamiltonian_cycle(g).decision;
    rec.degree4_count = int(t.nodes_of_degree(4).size());
    const TripleIntersectionReport tir = triple_intersection_report(t);
    std::string sizes;
    for (const auto& tr : tir.triples) {
      if (!sizes.empty()) sizes += ";";
      sizes += std::to_string(tr.shared.size());
    }
    rec.triple_sizes = sizes;
    rec.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    result.records.push_back(std::move(rec));
  };

  const int span = p.n_max - 11;
  for (int i = 0; i < p.samples; ++i) {
    const int n = 12 + (i % span);
    const unsigned long long seed = p.seed + (unsigned long long)i;
    ++result.generated;
    consider(std::to_string(seed), generate_ran(n, seed).graph);
  }
  if (p.include_fixtures && p.samples > 0) {
    for (const char* name : {"nishizeki", "fig4_hamiltonian"}) {
      const Fixture* f = find_fixture(name);
      if (f) consider(f->name, f->graph());
    }
  }
  return result;
}

}  // namespace ran

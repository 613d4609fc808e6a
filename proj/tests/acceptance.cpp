// Acceptance suite: each criterion prints exactly one PASS/FAIL line; the
// process exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ran/classify.hpp"
#include "ran/clique_tree.hpp"
#include "ran/experiment.hpp"
#include "ran/fixtures.hpp"
#include "ran/generators.hpp"
#include "ran/graph.hpp"
#include "ran/hamilton.hpp"
#include "ran/json_io.hpp"
#include "ran/toughness.hpp"
#include "support.hpp"

using namespace ran;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int index, const std::string& title, const std::function<void()>& body) {
  const auto start = Clock::now();
  std::string error;
  try {
    body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  if (error.empty()) {
    std::cout << "PASS: criterion " << index << " (" << title << ") [" << ms << " ms]\n";
  } else {
    ++failures;
    std::cout << "FAIL: criterion " << index << " (" << title << "): " << error << "\n";
  }
  std::cout.flush();
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

std::string str(const Rational& r) { return r.str(); }

bool cycle_ok(const Graph& g, const std::vector<int>& cycle) {
  if (int(cycle.size()) != g.vertex_count()) return false;
  std::set<int> seen(cycle.begin(), cycle.end());
  if (int(seen.size()) != g.vertex_count()) return false;
  for (size_t i = 0; i < cycle.size(); ++i)
    if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  return true;
}

}  // namespace

int main() {
  criterion(1, "toughness formulas on targeted constructions", [] {
    for (int ell : {0, 1, 2}) {
      const Graph g = realize_ran_from_shape(regular_caterpillar_shape(4, ell + 1), 7);
      const int n = g.vertex_count();
      expect(n == 8 + 3 * ell, "caterpillar size is off");
      expect(classify(g).label == Label::C1, "expected a 4-regular tree class");
      const Rational want(n + 4, 2 * n - 4);
      const Rational got = toughness_exact(g).value;
      expect(got == want, "4-regular: expected " + str(want) + " got " + str(got) +
                              " at n=" + std::to_string(n));
    }
    for (int ell : {1, 2, 3}) {
      const Graph g = realize_ran_from_shape(regular_caterpillar_shape(3, ell), 7);
      const int n = g.vertex_count();
      expect(n == 7 + 2 * (ell - 1), "caterpillar size is off");
      expect(classify(g).label == Label::C2, "expected a 3-regular tree class");
      const Rational want(n + 1, n - 1);
      const Rational got = toughness_exact(g).value;
      expect(got == want, "3-regular: expected " + str(want) + " got " + str(got) +
                              " at n=" + std::to_string(n));
    }
    const Graph c0 = generate_ran(5, 3).graph;
    expect(classify(c0).label == Label::C0, "n=5 must land in the five-vertex class");
    expect(toughness_exact(c0).value == Rational(3, 2),
           "five-vertex class toughness must be 3/2");
  });

  criterion(2, "Goldner-Harary end to end", [] {
    const auto start = Clock::now();
    const Graph gh = find_fixture("goldner_harary")->graph();
    const CliqueTree t = build_clique_tree(gh);
    const ClassLabel cl = classify(gh, t);
    expect(cl.label == Label::C1 && cl.ell == 1, "wrong class");
    expect(toughness_exact(gh).value == Rational(5, 6), "toughness must be 5/6");
    expect(hamiltonian_cycle(gh).decision == Hamiltonicity::NonHamiltonian,
           "graph must be non-Hamiltonian");
    expect(t.node_count() == 8 && t.leaf_count() == 6, "tree must have 8 nodes and 6 leaves");
    const auto s = std::chrono::duration_cast<std::chrono::seconds>(Clock::now() - start);
    expect(s.count() < 60, "exceeded one minute");
  });

  criterion(3, "spanning mops on 50 single-hub instances", [] {
    const auto batch = testsupport::instances_of(Label::C5, 50, 9, 16, 2024);
    expect(int(batch.size()) == 50, "need 50 distinct instances");
    for (const Graph& g : batch) {
      const Mop m = build_spanning_mop_c5(g);
      expect(verify_mop(g, m), "mop verification failed at n=" +
                                   std::to_string(g.vertex_count()));
      expect(cycle_ok(g, m.boundary), "boundary is not a Hamiltonian cycle");
      if (g.vertex_count() <= 14) {
        const Rational tau = toughness_exact(g).value;
        expect(tau == Rational(1),
               "single-hub class toughness must be exactly 1, got " + str(tau));
      }
    }
  });

  criterion(4, "fat and slim double-hub classes are brittle", [] {
    bool saw_five_six = false;
    for (Label label : {Label::C6, Label::C7}) {
      const auto batch = testsupport::instances_of(label, 30, 12, 16, 31337);
      expect(int(batch.size()) == 30, "need 30 instances of " + std::string(to_string(label)));
      for (const Graph& g : batch) {
        const CliqueTree t = build_clique_tree(g);
        const ClassLabel cl = classify(g, t);
        const Rational tau = toughness_exact(g).value;
        expect(tau < Rational(1), std::string(to_string(label)) + " toughness must be below 1, got " +
                                      str(tau) + " at n=" + std::to_string(g.vertex_count()));
        expect(hamiltonian_cycle(g).decision == Hamiltonicity::NonHamiltonian,
               std::string(to_string(label)) + " instance must be non-Hamiltonian");
        if (label == Label::C6 && cl.witness_path && cl.witness_path->internal_nodes.empty()) {
          const EndpointCutWitness w = degree4_endpoint_cut(g, cl, t);
          if (w.cut.count() == 5 && w.components == 6) saw_five_six = true;
        }
      }
    }
    expect(saw_five_six, "no adjacent-hub instance produced the 5-vertex cut with 6 pieces");
  });

  criterion(5, "interval containment for the hub-free classes", [] {
    for (Label label : {Label::C3, Label::C4}) {
      const auto batch = testsupport::instances_of(label, 30, 6, 16, 4242);
      expect(int(batch.size()) == 30, "need 30 instances of " + std::string(to_string(label)));
      for (const Graph& g : batch) {
        const Rational tau = toughness_exact(g).value;
        const ToughnessInterval iv = class_toughness(label, g.vertex_count());
        expect(interval_admits(iv, tau),
               std::string(to_string(label)) + " toughness " + str(tau) + " escapes [" + str(iv.lower) +
                   ", " + str(iv.upper) + "] at n=" + std::to_string(g.vertex_count()));
      }
    }
    const Graph six = realize_ran_from_shape(path_shape(3), 5);
    expect(six.vertex_count() == 6, "three-node path must realize six vertices");
    const ToughnessInterval iv = class_toughness(Label::C3, 6);
    expect(iv.exact && iv.lower == Rational(3, 2), "bounds must coincide at n=6");
    expect(toughness_exact(six).value == Rational(3, 2), "n=6 path toughness must be 3/2");
  });

  criterion(6, "a thousand random graphs partition cleanly", [] {
    const auto start = Clock::now();
    std::mt19937_64 rng(606);
    for (int i = 0; i < 1000; ++i) {
      const int n = 5 + int(uniform_below(rng, 26));
      const Graph g = generate_ran(n, rng()).graph;
      const ClassLabel cl = classify(g);
      const CheckReport rep = class_cardinality_checks(cl, g);
      expect(rep.all_ok(), "cardinality check failed at n=" + std::to_string(n));
    }
    const auto s = std::chrono::duration_cast<std::chrono::seconds>(Clock::now() - start);
    expect(s.count() < 60, "exceeded one minute");
  });

  criterion(7, "monotonicity and the toughness-Hamiltonicity bridge", [] {
    std::mt19937_64 rng(707);
    for (int i = 0; i < 100; ++i) {
      const int n = 5 + int(uniform_below(rng, 8));
      const Graph g = generate_ran(n, rng()).graph;
      const Rational tau = toughness_exact(g).value;

      for (int v : simplicial_vertices(g)) {
        VertexSet keep = VertexSet::full(n);
        keep.reset(v);
        const auto sub = induced_subgraph(g, keep);
        const Rational after = is_complete(sub.graph) ? Rational::infinity()
                                                      : toughness_exact(sub.graph).value;
        expect(after >= tau, "simplicial removal lowered toughness at n=" + std::to_string(n));
      }

      for (auto [u, v] : g.edges()) {
        const Graph h = g.without_edge(u, v);
        const Rational after = is_connected(h) ? toughness_exact(h).value : Rational(0);
        expect(after <= tau, "edge removal raised toughness at n=" + std::to_string(n));
      }

      const Hamiltonicity ham = hamiltonian_cycle(g).decision;
      if (ham == Hamiltonicity::Hamiltonian)
        expect(tau >= Rational(1), "a Hamiltonian sample has toughness below 1");
      if (tau > Rational(1))
        expect(ham == Hamiltonicity::Hamiltonian,
               "toughness above 1 did not force a Hamiltonian cycle");
    }
  });

  criterion(8, "the open-class study reports without asserting", [] {
    const Graph nz = find_fixture("nishizeki")->graph();
    const CliqueTree tz = build_clique_tree(nz);
    expect(classify(nz, tz).label == Label::C8, "nishizeki must land in the open class");
    expect(hamiltonian_cycle(nz).decision == Hamiltonicity::NonHamiltonian,
           "nishizeki must be non-Hamiltonian");
    const TripleIntersectionReport rz = triple_intersection_report(tz);
    expect(rz.triples.size() == 1 && rz.triples[0].shared.size() == 1,
           "nishizeki hub triple must share exactly one vertex");

    const Graph f4 = find_fixture("fig4_hamiltonian")->graph();
    const CliqueTree t4 = build_clique_tree(f4);
    expect(classify(f4, t4).label == Label::C8, "companion must land in the open class");
    expect(hamiltonian_cycle(f4).decision == Hamiltonicity::Hamiltonian,
           "companion must be Hamiltonian");
    const TripleIntersectionReport r4 = triple_intersection_report(t4);
    expect(r4.triples.size() == 1 && r4.triples[0].shared.empty(),
           "companion hub triple must be empty");

    ExperimentParams p;
    p.n_max = 16;
    p.samples = 30000;
    p.seed = 1;
    const ExperimentResult res = run_c8_experiment(p);
    expect(int(res.records.size()) >= 100, "need at least 100 open-class samples, got " +
                                               std::to_string(res.records.size()));
    for (const auto& rec : res.records)
      expect(!rec.toughness.empty() && rec.toughness != "skipped",
             "every sample within the cap must report toughness");
    expect(res.summary().find("evidence, not proof") != std::string::npos,
           "the study must not assert the conjecture");
  });

  criterion(9, "clique-tree isomorphism matches the catalogued quartet", [] {
    auto form = [](const char* name) {
      return tree_canonical_form(build_clique_tree(find_fixture(name)->graph()));
    };
    expect(form("fig1_g1") == form("fig1_g2"), "first pair must be isomorphic");
    expect(form("fig1_g1") != form("fig1_g3"), "third tree must differ");
    expect(form("fig1_g1") == form("fig1_g4"), "fourth tree must match the first");
  });

  if (failures == 0) {
    std::cout << "all 9 criteria passed\n";
    return 0;
  }
  std::cout << failures << " criteria failed\n";
  return 1;
}

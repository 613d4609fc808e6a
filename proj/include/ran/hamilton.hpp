#pragma once

#include <utility>
#include <vector>

#include "ran/classify.hpp"
#include "ran/graph.hpp"

namespace ran {

inline constexpr int kHamiltonCap = 24;

enum class Hamiltonicity { Hamiltonian, NonHamiltonian, Unknown };
const char* to_string(Hamiltonicity h);

struct HamiltonResult {
  Hamiltonicity decision = Hamiltonicity::Unknown;  // never Unknown once decided
  std::vector<int> cycle;  // closed tour without repeating the start; empty when absent
};

// Exact decision by backtracking. Starts from a maximum-degree vertex, extends
// to the admissible neighbor of lowest remaining degree first, and prunes
// branches whose unvisited region is disconnected or contains a vertex with
// fewer than two usable cycle neighbors; both prunes preserve exactness. The
// returned cycle is re-validated edge by edge before returning.
HamiltonResult hamiltonian_cycle(const Graph& g, int cap = kHamiltonCap);

struct Mop {
  std::vector<std::pair<int, int>> edges;  // u < v, sorted; 2n-3 of them
  std::vector<int> boundary;               // outer cycle = Hamiltonian cycle of the host
};

// Constructs a spanning maximal outerplanar subgraph for a C5 input: seeds an
// eight-vertex wheel-like core around the unique degree-4 clique-tree node and
// grows one ear per remaining clique-tree node in BFS order. Free choices are
// resolved toward the smallest vertex index. Throws validation_error when the
// input is not C5 and theorem_violation if any construction invariant breaks.
Mop build_spanning_mop_c5(const Graph& g);

// True iff m's edges all lie in g, the subgraph is spanning with 2n-3 edges,
// forms a uniquely representable 2-tree, its boundary cycle (re-extracted by
// ear reduction) is a Hamiltonian cycle of g, and any stored boundary walks
// mop edges through every vertex exactly once.
bool verify_mop(const Graph& g, const Mop& m);

// Hamiltonicity promised by a class at vertex count n; Unknown for C8.
// Throws validation_error on an inadmissible (label, n) pair.
Hamiltonicity class_hamiltonicity(Label label, int n);

}  // namespace ran

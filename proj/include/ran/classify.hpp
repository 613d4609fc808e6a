#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ran/clique_tree.hpp"
#include "ran/graph.hpp"

namespace ran {

// Structural classes of a RAN, decided from its clique tree.
enum class Label { Complete, C0, C1, C2, C3, C4, C5, C6, C7, C8 };

const char* to_string(Label label);
std::optional<Label> label_from_string(const std::string& s);

enum class PathKind { Fat, Slim };

// Path in the clique tree between two degree-4 nodes qi, qj that are either
// adjacent or joined only through nodes of degree <= 3. Fat: no internal
// nodes, or all internal nodes have degree 3. Slim: some internal node has
// degree 2.
struct NeatPath {
  int endpoint_a = 0;
  int endpoint_b = 0;
  std::vector<int> internal_nodes;
  PathKind kind = PathKind::Fat;
  int endpoint_intersection = 0;  // |Q_a ∩ Q_b|
};

std::vector<NeatPath> neat_paths(const CliqueTree& t);

enum class SlimWitnessCase { A, B, C };

struct ClassLabel {
  Label label = Label::C8;
  int n = 0;
  int simplicial_count = 0;
  // C1/C2 size parameter: n = 8+3*ell resp. 7+2*ell.
  int ell = -1;
  std::vector<int> degree4_nodes;
  std::optional<NeatPath> witness_path;           // C6/C7 deciding path
  std::optional<SlimWitnessCase> witness_case;    // C7 only
  std::vector<int> witness_cliques;               // C7 case B/C helper nodes
};

// Throws not_a_ran_error when g is not a RAN.
ClassLabel classify(const Graph& g);
// Same, for a caller that already holds the clique tree of a verified RAN.
ClassLabel classify(const Graph& g, const CliqueTree& t);

struct CheckReport {
  struct Entry {
    std::string constraint;
    bool ok = false;
    std::string detail;
  };
  std::vector<Entry> entries;
  bool all_ok() const;
};

// Size/simplicial-count constraints implied by each class label.
// Throws theorem_violation naming the first failed constraint.
CheckReport class_cardinality_checks(const ClassLabel& cl, const Graph& g);

// Pairwise and triple clique intersections among the degree-4 tree nodes.
// Empty unless at least three such nodes exist.
struct TripleIntersectionReport {
  struct Pair {
    int a = 0, b = 0;
    std::vector<int> shared;
  };
  struct Triple {
    int a = 0, b = 0, c = 0;
    std::vector<int> shared;
  };
  std::vector<int> degree4_nodes;
  std::vector<Pair> pairs;
  std::vector<Triple> triples;
  bool empty() const { return pairs.empty() && triples.empty(); }
};

TripleIntersectionReport triple_intersection_report(const CliqueTree& t);

}  // namespace ran

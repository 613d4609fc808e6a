#pragma once

#include <vector>

#include "ran/classify.hpp"
#include "ran/clique_tree.hpp"
#include "ran/graph.hpp"
#include "ran/rational.hpp"
#include "ran/vertex_set.hpp"

namespace ran {

inline constexpr int kToughnessCap = 20;

struct ToughnessResult {
  Rational value;     // +infinity for complete graphs
  VertexSet witness;  // cut achieving the minimum; empty when value is infinite
  int components = 0; // number of pieces left by the cut; 0 when value is infinite
};

// Exact toughness: the minimum of |S| / (components of g - S) over every cut S
// that leaves at least two pieces. Exhaustive over all 2^n vertex subsets with
// exact rational comparisons. Among minimizers the witness has the fewest
// vertices, then the lexicographically smallest sorted vertex list. threads > 1
// splits the subset space into contiguous ranges; the merged result is
// identical for every thread count.
ToughnessResult toughness_exact(const Graph& g, int cap = kToughnessCap, int threads = 1);

struct ToughnessInterval {
  Rational lower;
  Rational upper;
  bool exact = false;         // lower == upper and the value holds exactly
  bool upper_strict = false;  // value < upper; lower is 0, excluded
  bool unknown = false;       // nothing is guaranteed for this class
};

// Predicted toughness interval for a class at vertex count n. Throws
// validation_error for Complete (toughness is +infinity, no interval applies)
// or when n is not an admissible size for the label.
ToughnessInterval class_toughness(Label label, int n);

// True when `value` is consistent with the interval (strict upper honoured;
// unknown admits everything).
bool interval_admits(const ToughnessInterval& iv, const Rational& value);

struct ToughnessCheck {
  ClassLabel label;
  ToughnessInterval predicted;
  ToughnessResult exact;
  bool asserted = false;  // false for C8, whose value is recorded but never checked
};

// classify + class_toughness + toughness_exact in one step; throws
// theorem_violation when the exact value escapes the predicted interval.
ToughnessCheck verify_class_toughness(const Graph& g, int cap = kToughnessCap, int threads = 1);

struct EndpointCutWitness {
  VertexSet cut;      // union of the two endpoint cliques of the witness path
  int components = 0; // pieces left after removing the cut
  Rational ratio;     // |cut| / components, a certified upper bound on toughness
};

// For a C6 instance whose witness path has adjacent endpoints, removing the
// union of the two degree-4 cliques (5 vertices, as they share a 3-vertex
// separator) leaves at least 6 pieces, certifying toughness < 1. Throws
// validation_error unless the label carries such a witness path.
EndpointCutWitness degree4_endpoint_cut(const Graph& g, const ClassLabel& cl,
                                        const CliqueTree& t);

struct MonotonicityStep {
  int removed_vertex = -1;  // -1 marks the removal of all simplicial vertices at once
  Rational before;
  Rational after;
};

// Toughness never drops when deleting one simplicial vertex, nor when deleting
// all of them together. Returns one step per simplicial vertex plus the
// combined step; throws theorem_violation on any decrease.
std::vector<MonotonicityStep> simplicial_removal_monotonicity_check(const Graph& g,
                                                                    int cap = kToughnessCap);

}  // namespace ran

#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "ran/graph.hpp"

namespace ran {

// Uniform integer in [0, bound) by rejection sampling on raw 64-bit draws.
// std::uniform_int_distribution is implementation-defined, this is not, so
// seeded runs reproduce across platforms and standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

struct InsertionStep {
  int v = 0;                      // inserted vertex
  std::array<int, 3> face{};      // host face, sorted ascending
};

// Construction log of a random Apollonian network: a base triangle followed by
// one vertex insertion per step, each into a face that is active at that time.
struct InsertionTrace {
  std::array<int, 3> base{0, 1, 2};
  std::vector<InsertionStep> steps;

  // Rebuilds the graph, validating that every step uses an available face
  // and that vertex ids are consecutive. Throws validation_error otherwise.
  Graph replay(std::string name = "") const;
};

struct GeneratedRan {
  Graph graph;
  InsertionTrace trace;
};

// Uniform random Apollonian network on n >= 4 vertices: starting from a
// triangle, each step inserts a vertex into an active face chosen uniformly.
GeneratedRan generate_ran(int n, std::uint64_t seed);

// Deterministic Apollonian network: starting from K4, every active face is
// subdivided once per round. depth 0 is K4 itself.
Graph generate_an(int depth, int max_depth = 6);

// True when g is a k-tree: K_{k+1}, or reducible to it by repeatedly removing
// a simplicial vertex of degree k. Disconnected graphs are never k-trees.
bool is_ktree(const Graph& g, int k);

// RAN = 3-tree whose clique tree is unique.
bool is_ran(const Graph& g);

// k-path: K_{k+1}, or a k-tree with exactly two simplicial vertices.
bool is_kpath(const Graph& g, int k);

// Unlabeled tree used to prescribe a clique-tree shape.
struct TreeShape {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;

  // Throws validation_error unless this is a tree with max degree <= 4.
  void validate() const;
  int max_degree() const;
  std::vector<int> degrees() const;
};

// Builds a RAN whose clique tree is isomorphic to the given shape. The root
// node and the assignment of clique 3-subsets to child edges are drawn from
// the seeded generator; distinct edges at a node always use distinct subsets.
Graph realize_ran_from_shape(const TreeShape& shape, std::uint64_t seed);

// Shape builders.
TreeShape path_shape(int nodes);
TreeShape star_shape(int leaves);
// Internal spine of `internal_nodes` nodes, padded with leaves so that every
// internal node has degree k (k = 3 or 4).
TreeShape regular_caterpillar_shape(int k, int internal_nodes);
// Random tree grown by attaching each new node to a uniformly chosen node
// that still has degree < max_degree.
TreeShape random_shape(int nodes, int max_degree, std::mt19937_64& rng);

}  // namespace ran

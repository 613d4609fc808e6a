#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ran/graph.hpp"

namespace ran {

// Maximal clique as a sorted vertex list.
using Clique = std::vector<int>;

struct CliqueTreeEdge {
  int a = 0;
  int b = 0;                   // node ids with a < b
  std::vector<int> separator;  // sorted intersection of the two cliques
};

// Clique tree of a connected chordal graph: nodes are the maximal cliques,
// edges form a maximum-weight spanning tree of the clique-intersection graph
// (weights are intersection sizes). Every vertex of the underlying graph then
// induces a connected subtree.
class CliqueTree {
 public:
  CliqueTree() = default;
  CliqueTree(std::vector<Clique> nodes, std::vector<CliqueTreeEdge> edges);

  int node_count() const { return int(nodes_.size()); }
  int edge_count() const { return int(edges_.size()); }
  const Clique& clique(int i) const { return nodes_[i]; }
  const std::vector<Clique>& cliques() const { return nodes_; }
  const std::vector<CliqueTreeEdge>& edges() const { return edges_; }

  const std::vector<int>& neighbors(int i) const { return adj_[i]; }
  int degree(int i) const { return int(adj_[i].size()); }
  int leaf_count() const;
  std::vector<int> nodes_of_degree(int d) const;

  // Unique node path between two nodes, endpoints included.
  std::vector<int> path_between(int a, int b) const;

  // Separator of the tree edge joining two adjacent nodes.
  const std::vector<int>& separator_between(int a, int b) const;

 private:
  std::vector<Clique> nodes_;
  std::vector<CliqueTreeEdge> edges_;
  std::vector<std::vector<int>> adj_;
};

// Maximal cliques of a connected chordal graph, derived from a perfect
// elimination ordering. Throws validation_error on non-chordal input.
std::vector<Clique> maximal_cliques(const Graph& g);

struct WeightedCliquePair {
  int i = 0;
  int j = 0;
  int weight = 0;
};

// All pairs of cliques with non-empty intersection.
std::vector<WeightedCliquePair> clique_intersection_graph(const std::vector<Clique>& cliques);

CliqueTree build_clique_tree(const Graph& g);

// Minimal vertex separators with multiplicities: one entry per distinct
// separator, counting the tree edges that realize it.
struct SeparatorMultiset {
  std::map<std::vector<int>, int> multiplicity;
  int edge_total = 0;
};

SeparatorMultiset minimal_separators(const CliqueTree& t);

// True when the clique tree is unique: no two minimal separators are in
// proper containment and every multiplicity is one.
bool is_uniquely_representable(const Graph& g);

// Canonical parenthesization of an unlabeled tree (AHU encoding rooted at the
// tree center; for a bicentral tree the smaller of the two encodings wins).
// Two trees are isomorphic iff their canonical forms match.
std::string tree_canonical_form(int node_count, const std::vector<std::pair<int, int>>& edges);
std::string tree_canonical_form(const CliqueTree& t);

struct DegreeProfile {
  std::map<int, int> count_by_degree;
  std::vector<int> degree4_nodes;
  int max_degree = 0;
};

// Degree census of a clique tree that is claimed to come from a RAN.
// Throws not_a_ran_error when any node degree exceeds 4.
DegreeProfile tree_degree_profile(const CliqueTree& t);

namespace detail {
// Kruskal over an explicit candidate list; exposed so tests can permute the
// candidate order and confirm the tie-breaking makes the result order-free.
CliqueTree kruskal_clique_tree(const std::vector<Clique>& cliques,
                               std::vector<WeightedCliquePair> candidates);
}  // namespace detail

}  // namespace ran

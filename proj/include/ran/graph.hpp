#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ran/vertex_set.hpp"

namespace ran {

// Simple undirected graph over dense vertex ids 0..n-1.
// Adjacency is stored as one bitset per vertex.
class Graph {
 public:
  static constexpr int kMaxVertices = 10000;

  Graph() = default;
  // Validates ids and rejects self-loops; duplicate pairs are collapsed.
  Graph(int n, const std::vector<std::pair<int, int>>& edges, std::string name = "");

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  const std::string& name() const { return name_; }

  bool has_edge(int u, int v) const { return adj_[u].test(v); }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }

  // Edges as (u, v) with u < v, ordered lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  // Copy of this graph with one edge removed.
  Graph without_edge(int u, int v) const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::string name_;
  std::vector<VertexSet> adj_;
};

bool is_connected(const Graph& g);

// Connected components of g with `removed` vertices deleted.
// Components are reported in order of their smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& removed);
std::vector<VertexSet> connected_components(const Graph& g);

// Vertices whose neighborhood induces a clique.
VertexSet simplicial_vertices(const Graph& g);

bool is_complete(const Graph& g);

// Maximum cardinality search followed by an elimination check.
// Returns an ordering v_0..v_{n-1} such that for every v_i the neighbors
// placed after it form a clique, or nullopt when g is not chordal.
// Requires a connected graph.
std::optional<std::vector<int>> perfect_elimination_ordering(const Graph& g);

bool is_chordal(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_original;    // new id -> original id
  std::vector<int> from_original;  // original id -> new id, -1 when dropped
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

}  // namespace ran

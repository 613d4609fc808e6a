#pragma once

#include <string>

#include "ran/clique_tree.hpp"
#include "ran/graph.hpp"

namespace ran {

// Plain undirected DOT with vertices in id order and edges sorted u < v.
std::string graph_to_dot(const Graph& g);

// One box per maximal clique, edges labeled with their separator.
std::string clique_tree_to_dot(const CliqueTree& t);

}  // namespace ran

#include "ran/dot_export.hpp"

#include <sstream>

namespace ran {

namespace {

std::string set_label(const std::vector<int>& verts) {
  std::string s = "{";
  for (size_t i = 0; i < verts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(verts[i]);
  }
  return s + "}";
}

}  // namespace

std::string graph_to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph ran {\n";
  if (!g.name().empty()) out << "  label=\"" << g.name() << "\";\n";
  out << "  node [shape=circle];\n";
  for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string clique_tree_to_dot(const CliqueTree& t) {
  std::ostringstream out;
  out << "graph clique_tree {\n  node [shape=box];\n";
  for (int i = 0; i < t.node_count(); ++i)
    out << "  q" << i << " [label=\"" << set_label(t.clique(i)) << "\"];\n";
  for (const CliqueTreeEdge& e : t.edges())
    out << "  q" << e.a << " -- q" << e.b << " [label=\"" << set_label(e.separator) << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace ran

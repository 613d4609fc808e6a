#include "ran/graph.hpp"

#include <algorithm>

#include "ran/errors.hpp"

namespace ran {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges, std::string name)
    : n_(n), name_(std::move(name)) {
  if (n < 0) throw validation_error("vertex count must be non-negative");
  if (n > kMaxVertices) {
    throw validation_error("vertex count " + std::to_string(n) + " exceeds the structural cap of " +
                           std::to_string(kMaxVertices));
  }
  adj_.assign(n, VertexSet(n));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw validation_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") is out of range for n=" + std::to_string(n));
    }
    if (u == v) throw validation_error("self-loop at vertex " + std::to_string(u));
    if (!adj_[u].test(v)) {
      adj_[u].set(v);
      adj_[v].set(u);
      ++m_;
    }
  }
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    for (int v = adj_[u].next(u); v != -1; v = adj_[u].next(v)) out.emplace_back(u, v);
  }
  return out;
}

Graph Graph::without_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_ || !has_edge(u, v)) {
    throw validation_error("cannot remove a non-edge");
  }
  auto e = edges();
  std::pair<int, int> key{std::min(u, v), std::max(u, v)};
  e.erase(std::remove(e.begin(), e.end(), key), e.end());
  return Graph(n_, e, name_);
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& removed) {
  int n = g.vertex_count();
  std::vector<VertexSet> comps;
  VertexSet remaining = VertexSet::full(n) - removed;
  while (remaining.any()) {
    VertexSet comp(n);
    VertexSet frontier(n);
    frontier.set(remaining.first());
    while (frontier.any()) {
      comp |= frontier;
      VertexSet next(n);
      for (int v : frontier) next |= g.neighbors(v);
      next &= remaining;
      next -= comp;
      frontier = next;
    }
    comps.push_back(comp);
    remaining -= comp;
  }
  return comps;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components(g, VertexSet(g.vertex_count()));
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return false;
  return connected_components(g).size() == 1;
}

VertexSet simplicial_vertices(const Graph& g) {
  int n = g.vertex_count();
  VertexSet out(n);
  for (int v = 0; v < n; ++v) {
    const VertexSet& nb = g.neighbors(v);
    bool clique = true;
    for (int u : nb) {
      VertexSet rest = nb;
      rest.reset(u);
      if (!g.neighbors(u).contains(rest)) {
        clique = false;
        break;
      }
    }
    if (clique) out.set(v);
  }
  return out;
}

bool is_complete(const Graph& g) {
  long long n = g.vertex_count();
  return g.edge_count() == n * (n - 1) / 2;
}

std::optional<std::vector<int>> perfect_elimination_ordering(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) throw validation_error("chordality is undefined for the empty graph");
  if (!is_connected(g)) throw validation_error("chordality check requires a connected graph");

  // Maximum cardinality search: repeatedly visit the unvisited vertex with the
  // most visited neighbors (ties to the smallest id).
  std::vector<int> weight(n, 0);
  std::vector<char> visited(n, 0);
  std::vector<int> visit_order;
  visit_order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (!visited[v] && (best == -1 || weight[v] > weight[best])) best = v;
    }
    visited[best] = 1;
    visit_order.push_back(best);
    for (int u : g.neighbors(best)) {
      if (!visited[u]) ++weight[u];
    }
  }

  // Reversed visit order is a perfect elimination ordering iff g is chordal.
  std::vector<int> order(visit_order.rbegin(), visit_order.rend());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  for (int i = 0; i < n; ++i) {
    int v = order[i];
    VertexSet later(n);
    int w = -1, wpos = n;
    for (int u : g.neighbors(v)) {
      if (pos[u] > i) {
        later.set(u);
        if (pos[u] < wpos) {
          wpos = pos[u];
          w = u;
        }
      }
    }
    if (w == -1) continue;
    later.reset(w);
    if (!g.neighbors(w).contains(later)) return std::nullopt;
  }
  return order;
}

bool is_chordal(const Graph& g) { return perfect_elimination_ordering(g).has_value(); }

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  if (keep.empty()) throw validation_error("induced subgraph needs a nonempty vertex set");
  int n = g.vertex_count();
  InducedSubgraph out;
  out.from_original.assign(n, -1);
  for (int v : keep) {
    out.from_original[v] = int(out.to_original.size());
    out.to_original.push_back(v);
  }
  std::vector<std::pair<int, int>> edges;
  for (int v : keep) {
    VertexSet nb = g.neighbors(v) & keep;
    for (int u = nb.next(v); u != -1; u = nb.next(u)) {
      edges.emplace_back(out.from_original[v], out.from_original[u]);
    }
  }
  out.graph = Graph(int(out.to_original.size()), edges, g.name());
  return out;
}

}  // namespace ran

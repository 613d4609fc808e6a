#include "ran/clique_tree.hpp"

#include <algorithm>
#include <numeric>

#include "ran/errors.hpp"

namespace ran {

namespace {

std::vector<int> sorted_intersection(const Clique& a, const Clique& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

CliqueTree::CliqueTree(std::vector<Clique> nodes, std::vector<CliqueTreeEdge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  adj_.assign(nodes_.size(), {});
  for (const auto& e : edges_) {
    adj_[e.a].push_back(e.b);
    adj_[e.b].push_back(e.a);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

int CliqueTree::leaf_count() const {
  if (node_count() == 1) return 0;
  int c = 0;
  for (int i = 0; i < node_count(); ++i) {
    if (degree(i) == 1) ++c;
  }
  return c;
}

std::vector<int> CliqueTree::nodes_of_degree(int d) const {
  std::vector<int> out;
  for (int i = 0; i < node_count(); ++i) {
    if (degree(i) == d) out.push_back(i);
  }
  return out;
}

std::vector<int> CliqueTree::path_between(int a, int b) const {
  std::vector<int> parent(node_count(), -2);
  parent[a] = -1;
  std::vector<int> frontier{a};
  while (!frontier.empty() && parent[b] == -2) {
    std::vector<int> next;
    for (int u : frontier) {
      for (int v : adj_[u]) {
        if (parent[v] == -2) {
          parent[v] = u;
          next.push_back(v);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<int> path;
  for (int v = b; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

const std::vector<int>& CliqueTree::separator_between(int a, int b) const {
  for (const auto& e : edges_) {
    if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return e.separator;
  }
  throw validation_error("separator_between called on non-adjacent tree nodes");
}

std::vector<Clique> maximal_cliques(const Graph& g) {
  auto peo = perfect_elimination_ordering(g);
  if (!peo) throw validation_error("maximal cliques require a chordal graph");
  const std::vector<int>& order = *peo;
  int n = g.vertex_count();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  // Candidate i is the closed later-neighborhood of order[i]. A candidate is a
  // maximal clique iff no earlier-eliminated neighbor's candidate contains it.
  std::vector<VertexSet> cand(n, VertexSet(n));
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    cand[i].set(v);
    for (int u : g.neighbors(v)) {
      if (pos[u] > i) cand[i].set(u);
    }
  }

  std::vector<Clique> cliques;
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    bool maximal = true;
    for (int u : g.neighbors(v)) {
      if (pos[u] < i && cand[pos[u]].contains(cand[i])) {
        maximal = false;
        break;
      }
    }
    if (maximal) cliques.push_back(cand[i].to_vector());
  }
  return cliques;
}

std::vector<WeightedCliquePair> clique_intersection_graph(const std::vector<Clique>& cliques) {
  int max_vertex = -1;
  for (const auto& c : cliques) {
    for (int v : c) max_vertex = std::max(max_vertex, v);
  }
  std::vector<std::vector<int>> holding(max_vertex + 1);
  for (int i = 0; i < int(cliques.size()); ++i) {
    for (int v : cliques[i]) holding[v].push_back(i);
  }
  std::vector<std::pair<int, int>> pairs;
  for (const auto& h : holding) {
    for (size_t x = 0; x < h.size(); ++x) {
      for (size_t y = x + 1; y < h.size(); ++y) pairs.emplace_back(h[x], h[y]);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  std::vector<WeightedCliquePair> out;
  out.reserve(pairs.size());
  for (auto [i, j] : pairs) {
    int w = int(sorted_intersection(cliques[i], cliques[j]).size());
    out.push_back({i, j, w});
  }
  return out;
}

namespace detail {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

CliqueTree kruskal_clique_tree(const std::vector<Clique>& cliques,
                               std::vector<WeightedCliquePair> candidates) {
  // Total order: heavier first, ties by the lexicographically smallest
  // sorted clique pair, so the result is independent of candidate order.
  auto pair_key = [&](const WeightedCliquePair& e) {
    const Clique& x = cliques[e.i];
    const Clique& y = cliques[e.j];
    return x < y ? std::make_pair(x, y) : std::make_pair(y, x);
  };
  std::sort(candidates.begin(), candidates.end(),
            [&](const WeightedCliquePair& a, const WeightedCliquePair& b) {
              if (a.weight != b.weight) return a.weight > b.weight;
              return pair_key(a) < pair_key(b);
            });

  UnionFind uf(int(cliques.size()));
  std::vector<CliqueTreeEdge> edges;
  for (const auto& c : candidates) {
    if (uf.merge(c.i, c.j)) {
      CliqueTreeEdge e;
      e.a = std::min(c.i, c.j);
      e.b = std::max(c.i, c.j);
      e.separator = sorted_intersection(cliques[c.i], cliques[c.j]);
      edges.push_back(e);
    }
  }
  if (edges.size() + 1 != cliques.size()) {
    throw theorem_violation("clique-intersection graph of a connected chordal graph must be connected");
  }
  return CliqueTree(cliques, std::move(edges));
}

}  // namespace detail

CliqueTree build_clique_tree(const Graph& g) {
  auto cliques = maximal_cliques(g);
  return detail::kruskal_clique_tree(cliques, clique_intersection_graph(cliques));
}

SeparatorMultiset minimal_separators(const CliqueTree& t) {
  SeparatorMultiset out;
  for (const auto& e : t.edges()) {
    ++out.multiplicity[e.separator];
    ++out.edge_total;
  }
  return out;
}

bool is_uniquely_representable(const Graph& g) {
  SeparatorMultiset ms = minimal_separators(build_clique_tree(g));
  for (const auto& [sep, mu] : ms.multiplicity) {
    if (mu != 1) return false;
  }
  // No proper containment between distinct separators.
  for (auto it = ms.multiplicity.begin(); it != ms.multiplicity.end(); ++it) {
    for (auto jt = std::next(it); jt != ms.multiplicity.end(); ++jt) {
      const auto& s = it->first;
      const auto& t2 = jt->first;
      if (s.size() == t2.size()) continue;
      const auto& small = s.size() < t2.size() ? s : t2;
      const auto& large = s.size() < t2.size() ? t2 : s;
      if (std::includes(large.begin(), large.end(), small.begin(), small.end())) return false;
    }
  }
  return true;
}

namespace {

std::string ahu_encode(int root, int parent, const std::vector<std::vector<int>>& adj) {
  std::vector<std::string> parts;
  for (int c : adj[root]) {
    if (c != parent) parts.push_back(ahu_encode(c, root, adj));
  }
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  out += ")";
  return out;
}

std::vector<int> tree_centers(int n, const std::vector<std::vector<int>>& adj) {
  if (n == 1) return {0};
  std::vector<int> deg(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[v] = int(adj[v].size());
    if (deg[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= int(layer.size());
    std::vector<int> next;
    for (int v : layer) {
      for (int u : adj[v]) {
        if (--deg[u] == 1) next.push_back(u);
      }
    }
    layer = std::move(next);
  }
  return layer;
}

}  // namespace

std::string tree_canonical_form(int node_count, const std::vector<std::pair<int, int>>& edges) {
  if (node_count <= 0) throw validation_error("canonical form of an empty tree");
  if (int(edges.size()) != node_count - 1) {
    throw validation_error("canonical form requires a tree edge count of nodes-1");
  }
  std::vector<std::vector<int>> adj(node_count);
  for (auto [a, b] : edges) {
    if (a < 0 || a >= node_count || b < 0 || b >= node_count || a == b) {
      throw validation_error("bad tree edge");
    }
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::string best;
  for (int c : tree_centers(node_count, adj)) {
    std::string enc = ahu_encode(c, -1, adj);
    if (best.empty() || enc < best) best = enc;
  }
  if (best.empty()) throw validation_error("canonical form requires a connected tree");
  return best;
}

std::string tree_canonical_form(const CliqueTree& t) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(t.edge_count());
  for (const auto& e : t.edges()) edges.emplace_back(e.a, e.b);
  return tree_canonical_form(t.node_count(), edges);
}

DegreeProfile tree_degree_profile(const CliqueTree& t) {
  DegreeProfile out;
  for (int i = 0; i < t.node_count(); ++i) {
    int d = t.degree(i);
    ++out.count_by_degree[d];
    out.max_degree = std::max(out.max_degree, d);
    if (d == 4) out.degree4_nodes.push_back(i);
  }
  if (out.max_degree > 4) {
    throw not_a_ran_error("clique-tree node of degree " + std::to_string(out.max_degree) +
                          ": the input cannot be a RAN");
  }
  return out;
}

}  // namespace ran

#include "ran/generators.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "ran/clique_tree.hpp"
#include "ran/errors.hpp"

namespace ran {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw validation_error("uniform_below with zero bound");
  std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

namespace {

std::array<int, 3> sorted_face(int a, int b, int c) {
  std::array<int, 3> f{a, b, c};
  std::sort(f.begin(), f.end());
  return f;
}

}  // namespace

Graph InsertionTrace::replay(std::string name) const {
  std::array<int, 3> b = base;
  std::sort(b.begin(), b.end());
  if (b != std::array<int, 3>{0, 1, 2}) {
    throw validation_error("trace base must be the triangle {0,1,2}");
  }
  std::set<std::array<int, 3>> active;
  active.insert({0, 1, 2});
  std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {1, 2}};
  int next = 3;
  for (const auto& s : steps) {
    if (s.v != next) {
      throw validation_error("trace step inserts vertex " + std::to_string(s.v) +
                             ", expected " + std::to_string(next));
    }
    auto f = sorted_face(s.face[0], s.face[1], s.face[2]);
    if (!active.erase(f)) {
      throw validation_error("trace step for vertex " + std::to_string(s.v) +
                             " uses a face that is not active");
    }
    for (int u : f) edges.emplace_back(u, s.v);
    active.insert(sorted_face(f[0], f[1], s.v));
    active.insert(sorted_face(f[0], f[2], s.v));
    active.insert(sorted_face(f[1], f[2], s.v));
    ++next;
  }
  return Graph(next, edges, std::move(name));
}

GeneratedRan generate_ran(int n, std::uint64_t seed) {
  if (n < 4) throw validation_error("generate_ran requires n >= 4");
  if (n > Graph::kMaxVertices) throw validation_error("generate_ran beyond the vertex cap");
  std::mt19937_64 rng(seed);
  InsertionTrace trace;
  std::vector<std::array<int, 3>> faces{{0, 1, 2}};
  for (int v = 3; v < n; ++v) {
    size_t idx = size_t(uniform_below(rng, faces.size()));
    std::array<int, 3> f = faces[idx];
    faces[idx] = faces.back();
    faces.pop_back();
    trace.steps.push_back({v, f});
    // v exceeds every existing id, so appending keeps each face sorted.
    faces.push_back({f[0], f[1], v});
    faces.push_back({f[0], f[2], v});
    faces.push_back({f[1], f[2], v});
  }
  Graph g = trace.replay("ran_n" + std::to_string(n) + "_s" + std::to_string(seed));
  return {std::move(g), std::move(trace)};
}

Graph generate_an(int depth, int max_depth) {
  if (depth < 0) throw validation_error("generate_an requires depth >= 0");
  if (depth > max_depth) {
    throw cap_exceeded_error("generate_an depth " + std::to_string(depth) +
                             " exceeds the cap of " + std::to_string(max_depth));
  }
  std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
  std::vector<std::array<int, 3>> active{{0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  int next = 4;
  for (int round = 0; round < depth; ++round) {
    std::vector<std::array<int, 3>> created;
    created.reserve(active.size() * 3);
    for (const auto& f : active) {
      int v = next++;
      for (int u : f) edges.emplace_back(u, v);
      created.push_back({f[0], f[1], v});
      created.push_back({f[0], f[2], v});
      created.push_back({f[1], f[2], v});
    }
    active = std::move(created);
  }
  return Graph(next, edges, "an_depth" + std::to_string(depth));
}

bool is_ktree(const Graph& g, int k) {
  if (k < 1) throw validation_error("is_ktree requires k >= 1");
  int n = g.vertex_count();
  if (n < k + 1) return false;
  if (!is_connected(g)) return false;

  VertexSet alive = VertexSet::full(n);
  int alive_count = n;

  auto reducible = [&](int v) {
    VertexSet nb = g.neighbors(v) & alive;
    if (nb.count() != k) return false;
    for (int u : nb) {
      VertexSet rest = nb;
      rest.reset(u);
      if (!g.neighbors(u).contains(rest)) return false;
    }
    return true;
  };

  std::deque<int> queue;
  std::vector<char> queued(n, 0);
  for (int v = 0; v < n; ++v) {
    queue.push_back(v);
    queued[v] = 1;
  }
  while (alive_count > k + 1 && !queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    queued[v] = 0;
    if (!alive.test(v) || !reducible(v)) continue;
    VertexSet nb = g.neighbors(v) & alive;
    alive.reset(v);
    --alive_count;
    for (int u : nb) {
      if (!queued[u]) {
        queue.push_back(u);
        queued[u] = 1;
      }
    }
  }
  if (alive_count != k + 1) return false;

  // Remaining vertices must form K_{k+1}.
  for (int v : alive) {
    VertexSet rest = alive;
    rest.reset(v);
    if (!g.neighbors(v).contains(rest)) return false;
  }
  return true;
}

bool is_ran(const Graph& g) { return is_ktree(g, 3) && is_uniquely_representable(g); }

bool is_kpath(const Graph& g, int k) {
  if (g.vertex_count() == k + 1) return is_complete(g);
  return is_ktree(g, k) && simplicial_vertices(g).count() == 2;
}

void TreeShape::validate() const {
  if (node_count < 1) throw validation_error("tree shape needs at least one node");
  if (int(edges.size()) != node_count - 1) {
    throw validation_error("tree shape must have exactly nodes-1 edges");
  }
  std::vector<std::vector<int>> adj(node_count);
  for (auto [a, b] : edges) {
    if (a < 0 || a >= node_count || b < 0 || b >= node_count || a == b) {
      throw validation_error("tree shape edge out of range");
    }
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (const auto& nb : adj) {
    if (int(nb.size()) > 4) {
      throw validation_error("tree shape has a node of degree > 4; no RAN realizes it");
    }
  }
  // Connectivity (edge count already forces acyclicity then).
  std::vector<char> seen(node_count, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : adj[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        ++visited;
        stack.push_back(u);
      }
    }
  }
  if (visited != node_count) throw validation_error("tree shape is disconnected");
}

int TreeShape::max_degree() const {
  int best = 0;
  for (int d : degrees()) best = std::max(best, d);
  return best;
}

std::vector<int> TreeShape::degrees() const {
  std::vector<int> deg(node_count, 0);
  for (auto [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

Graph realize_ran_from_shape(const TreeShape& shape, std::uint64_t seed) {
  shape.validate();
  std::mt19937_64 rng(seed);
  int q = shape.node_count;

  std::vector<std::vector<int>> adj(q);
  for (auto [a, b] : shape.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }

  int root = int(uniform_below(rng, std::uint64_t(q)));
  std::vector<std::array<int, 4>> clique(q);
  std::vector<std::array<int, 3>> parent_sep(q);
  std::vector<int> parent(q, -2);

  std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  clique[root] = {0, 1, 2, 3};
  parent[root] = -1;
  int next_vertex = 4;

  std::deque<int> queue{root};
  while (!queue.empty()) {
    int node = queue.front();
    queue.pop_front();
    const std::array<int, 4>& cq = clique[node];

    // The four 3-subsets of this clique, minus the one on the parent edge.
    std::vector<std::array<int, 3>> subsets;
    for (int skip = 0; skip < 4; ++skip) {
      std::array<int, 3> s{};
      int t = 0;
      for (int i = 0; i < 4; ++i) {
        if (i != skip) s[t++] = cq[i];
      }
      std::sort(s.begin(), s.end());
      if (parent[node] >= 0 && s == parent_sep[node]) continue;
      subsets.push_back(s);
    }
    // Seeded Fisher-Yates; children then consume subsets in order.
    for (size_t i = subsets.size(); i > 1; --i) {
      size_t j = size_t(uniform_below(rng, i));
      std::swap(subsets[i - 1], subsets[j]);
    }

    size_t used = 0;
    for (int child : adj[node]) {
      if (parent[child] != -2) continue;
      std::array<int, 3> s = subsets[used++];
      int w = next_vertex++;
      for (int u : s) edges.emplace_back(u, w);
      clique[child] = {s[0], s[1], s[2], w};
      std::sort(clique[child].begin(), clique[child].end());
      parent_sep[child] = s;
      parent[child] = node;
      queue.push_back(child);
    }
  }
  return Graph(q + 3, edges, "shaped_s" + std::to_string(seed));
}

TreeShape path_shape(int nodes) {
  TreeShape s;
  s.node_count = nodes;
  for (int i = 0; i + 1 < nodes; ++i) s.edges.emplace_back(i, i + 1);
  return s;
}

TreeShape star_shape(int leaves) {
  TreeShape s;
  s.node_count = leaves + 1;
  for (int i = 1; i <= leaves; ++i) s.edges.emplace_back(0, i);
  return s;
}

TreeShape regular_caterpillar_shape(int k, int internal_nodes) {
  if (k < 3 || k > 4) throw validation_error("caterpillar degree must be 3 or 4");
  if (internal_nodes < 1) throw validation_error("caterpillar needs an internal node");
  TreeShape s;
  std::vector<int> deg;
  for (int i = 0; i < internal_nodes; ++i) {
    deg.push_back(0);
    if (i > 0) {
      s.edges.emplace_back(i - 1, i);
      ++deg[i - 1];
      ++deg[i];
    }
  }
  int next = internal_nodes;
  for (int i = 0; i < internal_nodes; ++i) {
    while (deg[i] < k) {
      s.edges.emplace_back(i, next++);
      ++deg[i];
    }
  }
  s.node_count = next;
  return s;
}

TreeShape random_shape(int nodes, int max_degree, std::mt19937_64& rng) {
  if (nodes < 1) throw validation_error("random_shape needs at least one node");
  if (max_degree < 2) throw validation_error("random_shape needs max_degree >= 2");
  TreeShape s;
  s.node_count = nodes;
  std::vector<int> deg(nodes, 0);
  for (int v = 1; v < nodes; ++v) {
    std::vector<int> open;
    for (int u = 0; u < v; ++u) {
      if (deg[u] < max_degree) open.push_back(u);
    }
    int host = open[size_t(uniform_below(rng, open.size()))];
    s.edges.emplace_back(host, v);
    ++deg[host];
    ++deg[v];
  }
  return s;
}

}  // namespace ran

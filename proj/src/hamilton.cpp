#include "ran/hamilton.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <queue>
#include <set>
#include <string>

#include "ran/clique_tree.hpp"
#include "ran/errors.hpp"
#include "ran/generators.hpp"

namespace ran {

const char* to_string(Hamiltonicity h) {
  switch (h) {
    case Hamiltonicity::Hamiltonian: return "Hamiltonian";
    case Hamiltonicity::NonHamiltonian: return "NonHamiltonian";
    case Hamiltonicity::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

struct CycleSearch {
  int start = 0;
  std::uint64_t all = 0;
  std::vector<std::uint64_t> adj;
  std::vector<int> path;

  // Exactness-preserving prunes: the unvisited region must stay connected, and
  // every unvisited vertex still needs two usable cycle neighbors (drawn from
  // the unvisited region, the path head, or the start).
  bool viable(std::uint64_t visited, int last) const {
    const std::uint64_t un = all & ~visited;
    if (!un) return true;
    std::uint64_t comp = un & (0 - un);
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t grown = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) grown |= adj[std::countr_zero(f)];
      frontier = grown & un & ~comp;
      comp |= frontier;
    }
    if (comp != un) return false;
    const std::uint64_t usable = un | (1ull << last) | (1ull << start);
    for (std::uint64_t f = un; f; f &= f - 1)
      if (std::popcount(adj[std::countr_zero(f)] & usable) < 2) return false;
    return true;
  }

  bool extend(std::uint64_t visited, int last) {
    if (visited == all) return (adj[last] >> start) & 1;
    std::vector<std::pair<int, int>> order;  // (remaining degree, vertex)
    for (std::uint64_t f = adj[last] & ~visited; f; f &= f - 1) {
      int u = std::countr_zero(f);
      order.emplace_back(std::popcount(adj[u] & ~visited), u);
    }
    std::sort(order.begin(), order.end());
    for (auto [deg, u] : order) {
      (void)deg;
      const std::uint64_t with_u = visited | (1ull << u);
      if (!viable(with_u, u)) continue;
      path.push_back(u);
      if (extend(with_u, u)) return true;
      path.pop_back();
    }
    return false;
  }
};

}  // namespace

HamiltonResult hamiltonian_cycle(const Graph& g, int cap) {
  const int n = g.vertex_count();
  if (n > cap)
    throw cap_exceeded_error("Hamiltonicity search capped at " + std::to_string(cap) +
                             " vertices, got " + std::to_string(n));
  if (n > 63) throw validation_error("Hamiltonicity search supports at most 63 vertices");
  if (n < 3 || !is_connected(g)) return {Hamiltonicity::NonHamiltonian, {}};

  CycleSearch s;
  s.all = (1ull << n) - 1;
  s.adj.assign(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v)) s.adj[v] |= 1ull << u;
  for (int v = 1; v < n; ++v)
    if (g.degree(v) > g.degree(s.start)) s.start = v;
  s.path.push_back(s.start);
  if (!s.extend(1ull << s.start, s.start)) return {Hamiltonicity::NonHamiltonian, {}};

  if (int(s.path.size()) != n) throw theorem_violation("tour misses vertices");
  std::vector<char> seen(n, 0);
  for (int v : s.path) {
    if (seen[v]) throw theorem_violation("tour repeats vertex " + std::to_string(v));
    seen[v] = 1;
  }
  for (int i = 0; i < n; ++i) {
    if (!g.has_edge(s.path[i], s.path[(i + 1) % n]))
      throw theorem_violation("tour uses a missing edge at position " + std::to_string(i));
  }
  return {Hamiltonicity::Hamiltonian, s.path};
}

Mop build_spanning_mop_c5(const Graph& g) {
  const ClassLabel cl = classify(g);
  const bool base_case = cl.label == Label::C1 && cl.n == 8;  // seed-only construction
  if (cl.label != Label::C5 && !base_case)
    throw validation_error("spanning-mop construction needs a C5 input (or its 8-vertex core), got " +
                           std::string(to_string(cl.label)));

  const CliqueTree t = build_clique_tree(g);
  const std::vector<int> hubs = t.nodes_of_degree(4);
  if (hubs.size() != 1) throw theorem_violation("expected exactly one degree-4 clique-tree node");
  const int root = hubs[0];
  const Clique& q = t.clique(root);

  const int n = g.vertex_count();
  std::vector<int> next(n, -1), prev(n, -1);
  std::vector<std::pair<int, int>> edges;
  auto add_edge = [&](int u, int v) { edges.emplace_back(std::min(u, v), std::max(u, v)); };
  auto insert_between = [&](int u1, int u2, int w) {
    if (next[u1] != u2) throw theorem_violation("ear target is not a boundary edge");
    next[u1] = w;
    prev[w] = u1;
    next[w] = u2;
    prev[u2] = w;
    add_edge(w, u1);
    add_edge(w, u2);
  };

  std::vector<int> parent(t.node_count(), -1);
  std::vector<int> fresh(t.node_count(), -1);  // vertex each node stacks on its parent separator
  auto fresh_vertex = [&](int node, const std::vector<int>& sep) -> int {
    for (int v : t.clique(node))
      if (std::find(sep.begin(), sep.end(), v) == sep.end()) return v;
    throw theorem_violation("clique no larger than its separator");
  };

  // Seed: the root clique {a,b,c,d} plus the four neighbor vertices, one per
  // 3-subset separator, alternated around an octagon with the clique's edges
  // and one diagonal as chords.
  std::array<int, 4> wheel{-1, -1, -1, -1};  // wheel[i]: neighbor whose separator omits q[i]
  for (int nb : t.neighbors(root)) {
    parent[nb] = root;
    const std::vector<int> sep = t.separator_between(root, nb);
    fresh[nb] = fresh_vertex(nb, sep);
    for (int i = 0; i < 4; ++i)
      if (std::find(sep.begin(), sep.end(), q[i]) == sep.end()) wheel[i] = nb;
  }
  for (int i = 0; i < 4; ++i)
    if (wheel[i] < 0) throw theorem_violation("root separators do not cover all 3-subsets");

  const std::array<int, 8> ring{q[0], fresh[wheel[3]], q[1], fresh[wheel[0]],
                                q[2], fresh[wheel[1]], q[3], fresh[wheel[2]]};
  for (int i = 0; i < 8; ++i) {
    int u = ring[i], v = ring[(i + 1) % 8];
    next[u] = v;
    prev[v] = u;
    add_edge(u, v);
  }
  add_edge(q[0], q[1]);
  add_edge(q[1], q[2]);
  add_edge(q[2], q[3]);
  add_edge(q[3], q[0]);
  add_edge(q[0], q[2]);

  // Grow one ear per remaining clique-tree node, parents before children so a
  // node's vertex still sits between two vertices of its own clique when its
  // ears are attached.
  std::queue<int> bfs;
  for (int i : {3, 0, 1, 2}) bfs.push(wheel[i]);
  while (!bfs.empty()) {
    const int x = bfs.front();
    bfs.pop();
    const int v = fresh[x];
    std::vector<int> kids;
    for (int nb : t.neighbors(x))
      if (nb != parent[x]) kids.push_back(nb);
    std::sort(kids.begin(), kids.end());
    if (kids.empty()) continue;
    if (kids.size() > 2) throw theorem_violation("non-root clique-tree node with three children");

    const int f1 = prev[v], f2 = next[v];
    auto admissible = [&](int y) {
      const std::vector<int> sep = t.separator_between(x, y);
      if (std::find(sep.begin(), sep.end(), v) == sep.end())
        throw theorem_violation("child separator skips the parent's fresh vertex");
      parent[y] = x;
      fresh[y] = fresh_vertex(y, sep);
      bool s1 = std::find(sep.begin(), sep.end(), f1) != sep.end();
      bool s2 = std::find(sep.begin(), sep.end(), f2) != sep.end();
      return std::pair<bool, bool>(s1, s2);
    };

    if (kids.size() == 1) {
      auto [s1, s2] = admissible(kids[0]);
      if (!s1 && !s2) throw theorem_violation("no boundary edge accepts the ear");
      if (s1 && s2) {  // flexible: lean toward the smaller flank
        if (f1 < f2) insert_between(f1, v, fresh[kids[0]]);
        else insert_between(v, f2, fresh[kids[0]]);
      } else if (s1) {
        insert_between(f1, v, fresh[kids[0]]);
      } else {
        insert_between(v, f2, fresh[kids[0]]);
      }
    } else {
      auto [a1, b1] = admissible(kids[0]);
      auto [a2, b2] = admissible(kids[1]);
      if ((!a1 && !b1) || (!a2 && !b2)) throw theorem_violation("no boundary edge accepts the ear");
      int side0 = (a1 != b1) ? (a1 ? 1 : 2) : 0;  // 1 = edge (f1,v), 2 = edge (v,f2), 0 = free
      int side1 = (a2 != b2) ? (a2 ? 1 : 2) : 0;
      if (side0 == 0 && side1 == 0)
        throw theorem_violation("two free ears imply duplicate separators");
      if (side0 == 0) side0 = 3 - side1;
      if (side1 == 0) side1 = 3 - side0;
      if (side0 == side1) throw theorem_violation("two ears forced onto one boundary edge");
      if (side0 == 1) insert_between(f1, v, fresh[kids[0]]);
      else insert_between(v, f2, fresh[kids[0]]);
      if (side1 == 1) insert_between(f1, v, fresh[kids[1]]);
      else insert_between(v, f2, fresh[kids[1]]);
    }
    for (int y : kids) bfs.push(y);
  }

  Mop mop;
  for (int v = 0; v < n; ++v)
    if (next[v] < 0) throw theorem_violation("construction left a vertex off the boundary");
  mop.boundary.reserve(n);
  for (int v = 0, steps = 0; steps < n; v = next[v], ++steps) mop.boundary.push_back(v);
  if (mop.boundary.size() != size_t(n) || next[mop.boundary.back()] != 0)
    throw theorem_violation("boundary walk is not a single cycle");
  std::sort(edges.begin(), edges.end());
  mop.edges = std::move(edges);

  if (!verify_mop(g, mop))
    throw theorem_violation("constructed spanning subgraph failed mop verification");
  return mop;
}

bool verify_mop(const Graph& g, const Mop& m) {
  const int n = g.vertex_count();
  if (n < 3) return false;
  if (int(m.edges.size()) != 2 * n - 3) return false;
  for (auto [u, v] : m.edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) return false;
    if (!g.has_edge(u, v)) return false;
  }
  Graph sub(n, m.edges, "mop-check");
  if (sub.edge_count() != 2 * n - 3) return false;  // duplicates collapsed
  if (!is_ktree(sub, 2)) return false;
  if (!is_uniquely_representable(sub)) return false;

  // Peel ears (degree-2 vertices with adjacent neighbors), then reinsert in
  // reverse to rebuild the outer cycle; a base pair that is not consecutive in
  // the partial cycle means the subgraph is not outerplanar.
  std::vector<std::set<int>> adj(n);
  for (auto [u, v] : sub.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<std::array<int, 3>> ears;
  std::vector<char> alive(n, 1);
  int remaining = n;
  while (remaining > 3) {
    int w = -1;
    for (int v = 0; v < n && w < 0; ++v) {
      if (!alive[v] || adj[v].size() != 2) continue;
      auto it = adj[v].begin();
      int p = *it++;
      if (adj[p].count(*it)) w = v;
    }
    if (w < 0) return false;
    auto it = adj[w].begin();
    int p = *it++, r = *it;
    ears.push_back({w, p, r});
    adj[p].erase(w);
    adj[r].erase(w);
    adj[w].clear();
    alive[w] = 0;
    --remaining;
  }
  std::vector<int> cycle;
  for (int v = 0; v < n; ++v)
    if (alive[v]) cycle.push_back(v);
  if (cycle.size() != 3) return false;
  if (!adj[cycle[0]].count(cycle[1]) || !adj[cycle[1]].count(cycle[2]) ||
      !adj[cycle[0]].count(cycle[2]))
    return false;
  for (auto rit = ears.rbegin(); rit != ears.rend(); ++rit) {
    auto [w, p, r] = *rit;
    int pos = -1;
    const int len = int(cycle.size());
    for (int i = 0; i < len && pos < 0; ++i) {
      int u1 = cycle[i], u2 = cycle[(i + 1) % len];
      if ((u1 == p && u2 == r) || (u1 == r && u2 == p)) pos = i;
    }
    if (pos < 0) return false;
    cycle.insert(cycle.begin() + pos + 1, w);
  }
  if (int(cycle.size()) != n) return false;
  for (int i = 0; i < n; ++i)
    if (!g.has_edge(cycle[i], cycle[(i + 1) % n])) return false;

  if (!m.boundary.empty()) {
    if (int(m.boundary.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : m.boundary) {
      if (v < 0 || v >= n || seen[v]) return false;
      seen[v] = 1;
    }
    for (int i = 0; i < n; ++i)
      if (!sub.has_edge(m.boundary[i], m.boundary[(i + 1) % n])) return false;
  }
  return true;
}

Hamiltonicity class_hamiltonicity(Label label, int n) {
  auto require = [&](bool ok, const std::string& what) {
    if (!ok)
      throw validation_error("n=" + std::to_string(n) + " is not admissible for class " +
                             to_string(label) + " (" + what + ")");
  };
  switch (label) {
    case Label::Complete:
      require(n >= 3, "a cycle needs three vertices");
      return Hamiltonicity::Hamiltonian;
    case Label::C0:
      require(n == 5, "needs n = 5");
      return Hamiltonicity::Hamiltonian;
    case Label::C1:
      require(n >= 8 && (n - 8) % 3 == 0, "needs n = 8 + 3l");
      return n == 8 ? Hamiltonicity::Hamiltonian : Hamiltonicity::NonHamiltonian;
    case Label::C2:
      require(n >= 7 && (n - 7) % 2 == 0, "needs odd n >= 7");
      return Hamiltonicity::Hamiltonian;
    case Label::C3:
      require(n >= 6, "needs n >= 6");
      return Hamiltonicity::Hamiltonian;
    case Label::C4:
      require(n >= 8, "needs n >= 8");
      return Hamiltonicity::Hamiltonian;
    case Label::C5:
      require(n >= 9, "needs n >= 9");
      return Hamiltonicity::Hamiltonian;
    case Label::C6:
      require(n >= 12, "needs n >= 12");
      return Hamiltonicity::NonHamiltonian;
    case Label::C7:
      require(n >= 13, "needs n >= 13");
      return Hamiltonicity::NonHamiltonian;
    case Label::C8:
      require(n >= 12, "needs n >= 12");
      return Hamiltonicity::Unknown;
  }
  throw validation_error("unrecognised class label");
}

}  // namespace ran

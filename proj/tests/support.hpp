#pragma once

// Shared test utilities: independent oracles (written against the definitions,
// not the production algorithms) plus deterministic instance samplers.

#include <sys/wait.h>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ran/classify.hpp"
#include "ran/clique_tree.hpp"
#include "ran/generators.hpp"
#include "ran/graph.hpp"
#include "ran/rational.hpp"

namespace testsupport {

// ---- union-find, the oracle's own component counter ----
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

inline int component_count_oracle(const ran::Graph& g, const std::vector<bool>& removed) {
  UnionFind uf(g.vertex_count());
  for (auto [u, v] : g.edges())
    if (!removed[u] && !removed[v]) uf.unite(u, v);
  std::set<int> roots;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!removed[v]) roots.insert(uf.find(v));
  return int(roots.size());
}

// Exhaustive toughness straight from the definition: min |S|/omega(G-S) over
// every S whose removal disconnects the graph. No pruning, no shortcuts.
inline ran::Rational naive_toughness(const ran::Graph& g) {
  const int n = g.vertex_count();
  bool have = false;
  long long bn = 0, bd = 1;  // best |S|/omega as a raw fraction
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<bool> removed(n, false);
    int s = 0;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) {
        removed[v] = true;
        ++s;
      }
    const int comps = component_count_oracle(g, removed);
    if (comps < 2) continue;
    if (!have || (long long)s * bd < bn * comps) {
      bn = s;
      bd = comps;
      have = true;
    }
  }
  if (!have) return ran::Rational::infinity();
  return ran::Rational(bn, bd);
}

// Every maximal clique by subset enumeration (n <= ~16).
inline std::vector<std::vector<int>> brute_force_maximal_cliques(const ran::Graph& g) {
  const int n = g.vertex_count();
  std::vector<unsigned> cliques;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    bool clique = true;
    for (int u = 0; u < n && clique; ++u)
      if (mask & (1u << u))
        for (int v = u + 1; v < n && clique; ++v)
          if ((mask & (1u << v)) && !g.has_edge(u, v)) clique = false;
    if (!clique) continue;
    bool maximal = true;
    for (int w = 0; w < n && maximal; ++w) {
      if (mask & (1u << w)) continue;
      bool joins_all = true;
      for (int u = 0; u < n && joins_all; ++u)
        if ((mask & (1u << u)) && !g.has_edge(u, w)) joins_all = false;
      if (joins_all) maximal = false;
    }
    if (maximal) cliques.push_back(mask);
  }
  std::vector<std::vector<int>> out;
  for (unsigned mask : cliques) {
    std::vector<int> c;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) c.push_back(v);
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// A perfect elimination ordering is valid iff each vertex's later neighbors
// form a clique.
inline bool is_valid_peo(const ran::Graph& g, const std::vector<int>& order) {
  const int n = g.vertex_count();
  if (int(order.size()) != n) return false;
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || pos[order[i]] != -1) return false;
    pos[order[i]] = i;
  }
  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    std::vector<int> later;
    for (int u : g.neighbors(v))
      if (pos[u] > i) later.push_back(u);
    for (size_t a = 0; a < later.size(); ++a)
      for (size_t b = a + 1; b < later.size(); ++b)
        if (!g.has_edge(later[a], later[b])) return false;
  }
  return true;
}

// ---- spanning-tree oracle over the clique intersection graph ----
struct SpanningTree {
  int weight = 0;
  std::vector<int> edge_indices;  // into the WeightedCliquePair list
};

// Enumerates every spanning tree of the clique intersection graph by choosing
// node_count-1 edges and testing acyclic connectivity. Small inputs only.
inline std::vector<SpanningTree> all_spanning_trees(int node_count,
                                                    const std::vector<ran::WeightedCliquePair>& edges) {
  std::vector<SpanningTree> out;
  const int need = node_count - 1;
  if (need < 0 || int(edges.size()) < need) return out;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int from) -> void {
    if (int(pick.size()) == need) {
      UnionFind uf(node_count);
      int joined = 0, w = 0;
      for (int idx : pick) {
        if (uf.unite(edges[idx].i, edges[idx].j)) ++joined;
        w += edges[idx].weight;
      }
      if (joined == need) out.push_back({w, pick});
      return;
    }
    for (int e = from; e < int(edges.size()); ++e) {
      pick.push_back(e);
      self(self, e + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline int max_spanning_tree_weight(const std::vector<SpanningTree>& trees) {
  int best = -1;
  for (const auto& t : trees) best = std::max(best, t.weight);
  return best;
}

// Separator multiset of one enumerated tree, as sorted vertex lists.
inline std::multiset<std::vector<int>> tree_separators(
    const std::vector<ran::WeightedCliquePair>& edges,
    const std::vector<ran::Clique>& cliques, const SpanningTree& t) {
  std::multiset<std::vector<int>> out;
  for (int idx : t.edge_indices) {
    const auto& a = cliques[edges[idx].i];
    const auto& b = cliques[edges[idx].j];
    std::vector<int> sep;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(sep));
    out.insert(sep);
  }
  return out;
}

// Clique-tree axiom: for every graph vertex the tree nodes containing it
// induce a connected subtree.
inline bool induced_subtrees_connected(const ran::Graph& g, const ran::CliqueTree& t) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> holders;
    for (int i = 0; i < t.node_count(); ++i) {
      const auto& c = t.clique(i);
      if (std::binary_search(c.begin(), c.end(), v)) holders.push_back(i);
    }
    if (holders.empty()) return false;
    UnionFind uf(t.node_count());
    for (const auto& e : t.edges()) {
      const bool a_in = std::binary_search(holders.begin(), holders.end(), e.a);
      const bool b_in = std::binary_search(holders.begin(), holders.end(), e.b);
      if (a_in && b_in) uf.unite(e.a, e.b);
    }
    for (int h : holders)
      if (uf.find(h) != uf.find(holders[0])) return false;
  }
  return true;
}

inline std::string edge_key(const ran::Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << ':';
  for (auto [u, v] : g.edges()) os << u << '-' << v << ';';
  return os.str();
}

// ---- deterministic per-class instance samplers ----

// Handcrafted clique-tree shapes that land in C6/C7/C8: two degree-4 hubs
// joined by a chain of `gap` internal nodes (given a leaf child each when
// `fat_chain`, so the chain is degree 3), with a regularity-breaking branch of
// `tail` chained nodes hanging off hub 0.
inline std::vector<ran::TreeShape> crafted_two_hub_shapes(int max_nodes) {
  using ran::TreeShape;
  std::vector<TreeShape> out;
  for (int gap = 0; gap <= 4; ++gap) {
    for (int fat_chain = 0; fat_chain <= (gap > 0 ? 1 : 0); ++fat_chain) {
      for (int tail = 1; tail <= 6; ++tail) {
        TreeShape s;
        int next = 2;
        std::vector<int> chain{0};
        for (int i = 0; i < gap; ++i) chain.push_back(next++);
        chain.push_back(1);
        for (size_t i = 0; i + 1 < chain.size(); ++i) s.edges.push_back({chain[i], chain[i + 1]});
        if (fat_chain)
          for (int i = 0; i < gap; ++i) s.edges.push_back({chain[size_t(i) + 1], next++});
        // three leaves on hub 1
        for (int i = 0; i < 3; ++i) s.edges.push_back({1, next++});
        // two leaves plus the breaker branch on hub 0
        for (int i = 0; i < 2; ++i) s.edges.push_back({0, next++});
        int at = 0;
        for (int i = 0; i < tail; ++i) {
          s.edges.push_back({at, next});
          at = next++;
        }
        s.node_count = next;
        if (s.node_count <= max_nodes) out.push_back(s);
      }
    }
  }
  return out;
}

// Label-directed shapes for the classes random trees rarely hit.
inline std::vector<ran::TreeShape> crafted_shapes_for(ran::Label label, int max_nodes) {
  using ran::Label;
  std::vector<ran::TreeShape> out;
  switch (label) {
    case Label::C1:
      for (int i = 1; 3 * i + 2 <= max_nodes; ++i)
        out.push_back(ran::regular_caterpillar_shape(4, i));
      break;
    case Label::C2:
      for (int i = 1; 2 * i + 2 <= max_nodes; ++i)
        out.push_back(ran::regular_caterpillar_shape(3, i));
      break;
    case Label::C3:
      for (int k = 3; k <= max_nodes; ++k) out.push_back(ran::path_shape(k));
      break;
    case Label::C6:
    case Label::C7:
    case Label::C8:
      return crafted_two_hub_shapes(max_nodes);
    default:
      break;
  }
  return out;
}

// Collects `want` distinct instances of one class with n in [n_lo, n_hi].
// Random tree shapes (max degree 4) are filtered by the classifier; crafted
// two-hub shapes seed the rare classes. Throws if the quota cannot be met.
inline std::vector<ran::Graph> instances_of(ran::Label label, int want, int n_lo, int n_hi,
                                            std::uint64_t seed) {
  std::vector<ran::Graph> out;
  std::set<std::string> seen;
  auto offer = [&](const ran::Graph& g) {
    if (int(out.size()) >= want) return;
    if (g.vertex_count() < n_lo || g.vertex_count() > n_hi) return;
    if (!ran::is_ran(g)) return;
    const ran::ClassLabel cl = ran::classify(g);
    if (cl.label != label) return;
    if (!seen.insert(edge_key(g)).second) return;
    out.push_back(g);
  };

  for (const auto& s : crafted_shapes_for(label, n_hi - 3)) {
    for (std::uint64_t k = 0; k < 6 && int(out.size()) < want; ++k)
      offer(ran::realize_ran_from_shape(s, seed + 1000 * k));
  }
  std::mt19937_64 rng(seed);
  for (int iter = 0; iter < 200000 && int(out.size()) < want; ++iter) {
    const int nodes = n_lo - 3 + int(ran::uniform_below(rng, std::uint64_t(n_hi - n_lo + 1)));
    const ran::TreeShape s = ran::random_shape(nodes, 4, rng);
    offer(ran::realize_ran_from_shape(s, rng()));
  }
  if (int(out.size()) < want)
    throw std::runtime_error("sampler could not collect enough instances of " +
                             std::string(ran::to_string(label)) + ": got " +
                             std::to_string(out.size()));
  return out;
}

// ---- CLI driver ----
struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const std::string base = "/tmp/ran_cli_" + std::to_string(++counter);
  const std::string out = base + ".out", err = base + ".err";
  const std::string cmd = std::string(RAN_CLI_PATH) + " " + args + " >" + out + " 2>" + err;
  const int status = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  std::remove(out.c_str());
  std::remove(err.c_str());
  return r;
}

}  // namespace testsupport

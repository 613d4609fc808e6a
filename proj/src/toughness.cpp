#include "ran/toughness.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <future>
#include <string>

#include "ran/errors.hpp"
#include "ran/generators.hpp"

namespace ran {

namespace {

struct Candidate {
  Rational value;
  std::uint64_t mask = 0;
  int omega = 0;
  int size = 0;
  bool valid = false;
};

// Total order on candidates: value, then |S|, then the cut holding the
// lowest-index vertex where the two masks differ (for equal sizes this is
// lexicographic order on the sorted vertex lists).
bool better(const Candidate& a, const Candidate& b) {
  if (!a.valid || !b.valid) return a.valid && !b.valid;
  if (a.value != b.value) return a.value < b.value;
  if (a.size != b.size) return a.size < b.size;
  if (a.mask == b.mask) return false;
  std::uint64_t diff = a.mask ^ b.mask;
  return (a.mask & (diff & (0 - diff))) != 0;
}

int component_count(const std::vector<std::uint64_t>& adj, std::uint64_t remaining) {
  int omega = 0;
  while (remaining) {
    ++omega;
    std::uint64_t comp = remaining & (0 - remaining);
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t grown = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) grown |= adj[std::countr_zero(f)];
      frontier = grown & remaining & ~comp;
      comp |= frontier;
    }
    remaining &= ~comp;
  }
  return omega;
}

Candidate scan_range(const std::vector<std::uint64_t>& adj, int n, std::uint64_t lo,
                     std::uint64_t hi) {
  Candidate best;
  const std::uint64_t full = (1ull << n) - 1;
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    int s = std::popcount(mask);
    if (s == 0 || s > n - 2) continue;
    // s/(n-s) is the least this cut can score; prune only when strictly worse,
    // so ties stay in play for the size/lex tie-break.
    if (best.valid && Rational(s, n - s) > best.value) continue;
    int omega = component_count(adj, full & ~mask);
    if (omega < 2) continue;
    Candidate cand{Rational(s, omega), mask, omega, s, true};
    if (better(cand, best)) best = cand;
  }
  return best;
}

std::string interval_str(const ToughnessInterval& iv) {
  if (iv.unknown) return "unknown";
  if (iv.upper_strict) return "< " + iv.upper.str();
  if (iv.exact) return "= " + iv.lower.str();
  return "[" + iv.lower.str() + ", " + iv.upper.str() + "]";
}

}  // namespace

ToughnessResult toughness_exact(const Graph& g, int cap, int threads) {
  const int n = g.vertex_count();
  if (!is_connected(g)) throw validation_error("toughness requires a connected graph");
  if (n > cap)
    throw cap_exceeded_error("toughness search capped at " + std::to_string(cap) +
                             " vertices, got " + std::to_string(n));
  if (n > 63) throw validation_error("exhaustive toughness search supports at most 63 vertices");
  if (is_complete(g)) return {Rational::infinity(), VertexSet(n), 0};

  std::vector<std::uint64_t> adj(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v)) adj[v] |= 1ull << u;

  const std::uint64_t total = 1ull << n;
  Candidate best;
  const int workers = std::max(1, threads);
  if (workers == 1 || total < 1024) {
    best = scan_range(adj, n, 1, total);
  } else {
    const std::uint64_t chunk = total / workers + 1;
    std::vector<std::future<Candidate>> parts;
    for (int w = 0; w < workers; ++w) {
      std::uint64_t lo = std::max<std::uint64_t>(1, std::uint64_t(w) * chunk);
      std::uint64_t hi = std::min(total, std::uint64_t(w + 1) * chunk);
      if (lo >= hi) continue;
      parts.push_back(std::async(std::launch::async,
                                 [&adj, n, lo, hi] { return scan_range(adj, n, lo, hi); }));
    }
    for (auto& p : parts) {
      Candidate c = p.get();
      if (better(c, best)) best = c;
    }
  }

  if (!best.valid) throw theorem_violation("no disconnecting cut found in a non-complete graph");
  ToughnessResult out{best.value, VertexSet(n), best.omega};
  for (std::uint64_t m = best.mask; m; m &= m - 1) out.witness.set(std::countr_zero(m));
  return out;
}

ToughnessInterval class_toughness(Label label, int n) {
  auto require = [&](bool ok, const std::string& what) {
    if (!ok)
      throw validation_error("n=" + std::to_string(n) + " is not admissible for class " +
                             to_string(label) + " (" + what + ")");
  };
  auto exact = [](Rational v) { return ToughnessInterval{v, v, true, false, false}; };
  switch (label) {
    case Label::Complete:
      throw validation_error("complete graphs have infinite toughness; no class interval");
    case Label::C0:
      require(n == 5, "needs n = 5");
      return exact(Rational(3, 2));
    case Label::C1:
      require(n >= 8 && (n - 8) % 3 == 0, "needs n = 8 + 3l");
      return exact(Rational(n + 4, 2 * n - 4));
    case Label::C2:
      require(n >= 7 && (n - 7) % 2 == 0, "needs odd n >= 7");
      return exact(Rational(n + 1, n - 1));
    case Label::C3: {
      require(n >= 6, "needs n >= 6");
      Rational lower = (n % 2 == 0) ? Rational(n, n - 2) : Rational(n + 1, n - 1);
      Rational upper(3, 2);
      return {lower, upper, lower == upper, false, false};
    }
    case Label::C4:
      require(n >= 8, "needs n >= 8");
      return {Rational(n + 2, n), Rational(4, 3), false, false, false};
    case Label::C5:
      require(n >= 9, "needs n >= 9");
      return exact(Rational(1));
    case Label::C6:
      require(n >= 12, "needs n >= 12");
      return {Rational(0), Rational(1), false, true, false};
    case Label::C7:
      require(n >= 13, "needs n >= 13");
      return {Rational(0), Rational(1), false, true, false};
    case Label::C8:
      require(n >= 12, "needs n >= 12");
      return {Rational(0), Rational::infinity(), false, false, true};
  }
  throw validation_error("unrecognised class label");
}

bool interval_admits(const ToughnessInterval& iv, const Rational& value) {
  if (iv.unknown) return true;
  if (iv.upper_strict) return value > iv.lower && value < iv.upper;
  if (iv.exact) return value == iv.lower;
  return iv.lower <= value && value <= iv.upper;
}

ToughnessCheck verify_class_toughness(const Graph& g, int cap, int threads) {
  ToughnessCheck check;
  check.label = classify(g);
  if (check.label.label == Label::Complete) {
    Rational inf = Rational::infinity();
    check.predicted = {inf, inf, true, false, false};
  } else {
    check.predicted = class_toughness(check.label.label, check.label.n);
  }
  check.exact = toughness_exact(g, cap, threads);
  check.asserted = !check.predicted.unknown;
  if (check.asserted && !interval_admits(check.predicted, check.exact.value)) {
    throw theorem_violation("class " + std::string(to_string(check.label.label)) + " at n=" +
                            std::to_string(check.label.n) + " predicts toughness " +
                            interval_str(check.predicted) + " but brute force found " +
                            check.exact.value.str());
  }
  return check;
}

EndpointCutWitness degree4_endpoint_cut(const Graph& g, const ClassLabel& cl,
                                        const CliqueTree& t) {
  if (!cl.witness_path || !cl.witness_path->internal_nodes.empty())
    throw validation_error("endpoint cut needs a witness path with adjacent endpoints");
  EndpointCutWitness w{VertexSet(g.vertex_count()), 0, Rational(0)};
  for (int v : t.clique(cl.witness_path->endpoint_a)) w.cut.set(v);
  for (int v : t.clique(cl.witness_path->endpoint_b)) w.cut.set(v);
  w.components = int(connected_components(g, w.cut).size());
  if (w.components < 2) throw theorem_violation("endpoint cut failed to disconnect the graph");
  w.ratio = Rational(w.cut.count(), w.components);
  return w;
}

std::vector<MonotonicityStep> simplicial_removal_monotonicity_check(const Graph& g, int cap) {
  if (is_complete(g))
    throw validation_error("monotonicity check requires a non-complete graph");
  if (!is_chordal(g)) throw validation_error("monotonicity check requires a chordal graph");

  const Rational before = toughness_exact(g, cap).value;
  const VertexSet si = simplicial_vertices(g);
  std::vector<MonotonicityStep> steps;
  auto toughness_after = [&](const VertexSet& keep) {
    Graph sub = induced_subgraph(g, keep).graph;
    return is_connected(sub) ? toughness_exact(sub, cap).value : Rational(0);
  };
  auto record = [&](int removed, const Rational& after) {
    steps.push_back({removed, before, after});
    if (after < before)
      throw theorem_violation("toughness dropped from " + before.str() + " to " + after.str() +
                              " after removing " +
                              (removed < 0 ? std::string("all simplicial vertices")
                                           : "simplicial vertex " + std::to_string(removed)));
  };

  const VertexSet all = VertexSet::full(g.vertex_count());
  for (int v : si) {
    VertexSet keep = all;
    keep.reset(v);
    record(v, toughness_after(keep));
  }
  record(-1, toughness_after(all - si));
  return steps;
}

}  // namespace ran

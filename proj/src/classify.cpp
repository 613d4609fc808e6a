#include "ran/classify.hpp"

#include <algorithm>

#include "ran/errors.hpp"
#include "ran/generators.hpp"

namespace ran {

const char* to_string(Label label) {
  switch (label) {
    case Label::Complete: return "Complete";
    case Label::C0: return "C0";
    case Label::C1: return "C1";
    case Label::C2: return "C2";
    case Label::C3: return "C3";
    case Label::C4: return "C4";
    case Label::C5: return "C5";
    case Label::C6: return "C6";
    case Label::C7: return "C7";
    case Label::C8: return "C8";
  }
  return "?";
}

std::optional<Label> label_from_string(const std::string& s) {
  static const Label all[] = {Label::Complete, Label::C0, Label::C1, Label::C2, Label::C3,
                              Label::C4,       Label::C5, Label::C6, Label::C7, Label::C8};
  for (Label l : all) {
    if (s == to_string(l)) return l;
  }
  return std::nullopt;
}

std::vector<NeatPath> neat_paths(const CliqueTree& t) {
  std::vector<int> deg4 = t.nodes_of_degree(4);
  std::vector<NeatPath> out;
  for (size_t x = 0; x < deg4.size(); ++x) {
    for (size_t y = x + 1; y < deg4.size(); ++y) {
      std::vector<int> path = t.path_between(deg4[x], deg4[y]);
      NeatPath np;
      np.endpoint_a = deg4[x];
      np.endpoint_b = deg4[y];
      np.internal_nodes.assign(path.begin() + 1, path.end() - 1);
      bool neat = true;
      bool has_deg2 = false;
      for (int node : np.internal_nodes) {
        int d = t.degree(node);
        if (d >= 4) {
          neat = false;
          break;
        }
        if (d == 2) has_deg2 = true;
      }
      if (!neat) continue;
      np.kind = (np.internal_nodes.empty() || !has_deg2) ? PathKind::Fat : PathKind::Slim;
      std::vector<int> shared;
      const Clique& qa = t.clique(np.endpoint_a);
      const Clique& qb = t.clique(np.endpoint_b);
      std::set_intersection(qa.begin(), qa.end(), qb.begin(), qb.end(),
                            std::back_inserter(shared));
      np.endpoint_intersection = int(shared.size());
      out.push_back(std::move(np));
    }
  }
  return out;
}

namespace {

// Maximal cliques (other than the endpoints) of tree degree 3 whose vertex
// set lies inside the union of the two endpoint cliques.
std::vector<int> degree3_cliques_inside_union(const CliqueTree& t, const NeatPath& p) {
  std::vector<int> uni;
  const Clique& qa = t.clique(p.endpoint_a);
  const Clique& qb = t.clique(p.endpoint_b);
  std::set_union(qa.begin(), qa.end(), qb.begin(), qb.end(), std::back_inserter(uni));
  std::vector<int> out;
  for (int i = 0; i < t.node_count(); ++i) {
    if (i == p.endpoint_a || i == p.endpoint_b) continue;
    if (t.degree(i) != 3) continue;
    const Clique& q = t.clique(i);
    if (std::includes(uni.begin(), uni.end(), q.begin(), q.end())) out.push_back(i);
  }
  return out;
}

}  // namespace

ClassLabel classify(const Graph& g) {
  if (!is_ran(g)) throw not_a_ran_error("classification is defined for RANs only");
  if (is_complete(g)) {
    ClassLabel cl;
    cl.label = Label::Complete;
    cl.n = g.vertex_count();
    cl.simplicial_count = simplicial_vertices(g).count();
    return cl;
  }
  return classify(g, build_clique_tree(g));
}

ClassLabel classify(const Graph& g, const CliqueTree& t) {
  ClassLabel cl;
  cl.n = g.vertex_count();
  cl.simplicial_count = simplicial_vertices(g).count();

  if (is_complete(g)) {
    cl.label = Label::Complete;
    return cl;
  }
  if (cl.n == 5) {
    cl.label = Label::C0;
    return cl;
  }

  cl.degree4_nodes = t.nodes_of_degree(4);

  // k-regular: every non-leaf node has degree exactly k.
  int k = 0;
  bool regular = true;
  for (int i = 0; i < t.node_count() && regular; ++i) {
    int d = t.degree(i);
    if (d <= 1) continue;
    if (k == 0) {
      k = d;
    } else if (d != k) {
      regular = false;
    }
  }
  if (regular && k > 0) {
    switch (k) {
      case 4:
        cl.label = Label::C1;
        cl.ell = (cl.n - 8) / 3;
        return cl;
      case 3:
        cl.label = Label::C2;
        cl.ell = (cl.n - 7) / 2;
        return cl;
      default:
        cl.label = Label::C3;
        return cl;
    }
  }

  if (cl.degree4_nodes.empty()) {
    cl.label = Label::C4;
    return cl;
  }
  if (cl.degree4_nodes.size() == 1) {
    cl.label = Label::C5;
    return cl;
  }

  std::vector<NeatPath> paths = neat_paths(t);
  for (const NeatPath& p : paths) {
    if (p.kind == PathKind::Fat) {
      cl.label = Label::C6;
      cl.witness_path = p;
      return cl;
    }
  }
  for (const NeatPath& p : paths) {
    int plen = int(p.internal_nodes.size());
    if (p.endpoint_intersection == 2 && plen >= 2) {
      cl.label = Label::C7;
      cl.witness_path = p;
      cl.witness_case = SlimWitnessCase::A;
      return cl;
    }
    if (p.endpoint_intersection == 1 && plen >= 3) {
      std::vector<int> inside = degree3_cliques_inside_union(t, p);
      if (!inside.empty()) {
        cl.label = Label::C7;
        cl.witness_path = p;
        cl.witness_case = SlimWitnessCase::B;
        cl.witness_cliques = {inside.front()};
        return cl;
      }
    }
    if (p.endpoint_intersection == 0 && plen >= 4) {
      std::vector<int> inside = degree3_cliques_inside_union(t, p);
      if (inside.size() >= 2) {
        cl.label = Label::C7;
        cl.witness_path = p;
        cl.witness_case = SlimWitnessCase::C;
        cl.witness_cliques = {inside[0], inside[1]};
        return cl;
      }
    }
  }
  cl.label = Label::C8;
  return cl;
}

bool CheckReport::all_ok() const {
  for (const auto& e : entries) {
    if (!e.ok) return false;
  }
  return true;
}

namespace {

void check(CheckReport& r, const std::string& constraint, bool ok, const std::string& detail) {
  r.entries.push_back({constraint, ok, detail});
  if (!ok) throw theorem_violation("cardinality constraint failed: " + constraint + " (" + detail + ")");
}

}  // namespace

CheckReport class_cardinality_checks(const ClassLabel& cl, const Graph& g) {
  CheckReport r;
  int n = g.vertex_count();
  int si = cl.simplicial_count;
  check(r, "n matches graph", n == cl.n, "label carries n=" + std::to_string(cl.n));
  switch (cl.label) {
    case Label::Complete:
      check(r, "Complete: n == 4", n == 4, "n=" + std::to_string(n));
      break;
    case Label::C0:
      check(r, "C0: n == 5", n == 5, "n=" + std::to_string(n));
      check(r, "C0: |SI| == 2", si == 2, "si=" + std::to_string(si));
      break;
    case Label::C1:
      check(r, "C1: n == 8+3l", n >= 8 && (n - 8) % 3 == 0, "n=" + std::to_string(n));
      check(r, "C1: l recorded", cl.ell == (n - 8) / 3, "l=" + std::to_string(cl.ell));
      check(r, "C1: |SI| == 4+2l", si == 4 + 2 * cl.ell, "si=" + std::to_string(si));
      break;
    case Label::C2:
      check(r, "C2: n == 7+2l", n >= 7 && (n - 7) % 2 == 0, "n=" + std::to_string(n));
      check(r, "C2: l recorded", cl.ell == (n - 7) / 2, "l=" + std::to_string(cl.ell));
      check(r, "C2: |SI| == floor(n/2)", si == n / 2, "si=" + std::to_string(si));
      break;
    case Label::C3:
      check(r, "C3: n >= 6", n >= 6, "n=" + std::to_string(n));
      check(r, "C3: |SI| == 2", si == 2, "si=" + std::to_string(si));
      break;
    case Label::C4:
      check(r, "C4: n >= 8", n >= 8, "n=" + std::to_string(n));
      check(r, "C4: |SI| >= 3", si >= 3, "si=" + std::to_string(si));
      break;
    case Label::C5:
      check(r, "C5: n >= 9", n >= 9, "n=" + std::to_string(n));
      check(r, "C5: |SI| >= 4", si >= 4, "si=" + std::to_string(si));
      break;
    case Label::C6:
      check(r, "C6: n >= 12", n >= 12, "n=" + std::to_string(n));
      check(r, "C6: |SI| >= 6", si >= 6, "si=" + std::to_string(si));
      break;
    case Label::C7:
      check(r, "C7: n >= 13", n >= 13, "n=" + std::to_string(n));
      check(r, "C7: |SI| >= 6", si >= 6, "si=" + std::to_string(si));
      break;
    case Label::C8:
      check(r, "C8: n >= 12", n >= 12, "n=" + std::to_string(n));
      check(r, "C8: |SI| >= 6", si >= 6, "si=" + std::to_string(si));
      break;
  }
  if (n >= 5) {
    // leaves of a max-degree-4 tree on n-3 nodes: si <= 2*internal + 2
    check(r, "simplicial count within degree-4 leaf bound", 3 * si <= 2 * n - 4,
          "si=" + std::to_string(si) + " n=" + std::to_string(n));
  }
  return r;
}

TripleIntersectionReport triple_intersection_report(const CliqueTree& t) {
  TripleIntersectionReport r;
  r.degree4_nodes = t.nodes_of_degree(4);
  if (r.degree4_nodes.size() < 3) return r;
  const auto& d4 = r.degree4_nodes;
  for (size_t x = 0; x < d4.size(); ++x) {
    for (size_t y = x + 1; y < d4.size(); ++y) {
      TripleIntersectionReport::Pair p;
      p.a = d4[x];
      p.b = d4[y];
      const Clique& qa = t.clique(p.a);
      const Clique& qb = t.clique(p.b);
      std::set_intersection(qa.begin(), qa.end(), qb.begin(), qb.end(),
                            std::back_inserter(p.shared));
      r.pairs.push_back(std::move(p));
      for (size_t z = y + 1; z < d4.size(); ++z) {
        TripleIntersectionReport::Triple tr;
        tr.a = d4[x];
        tr.b = d4[y];
        tr.c = d4[z];
        std::vector<int> ab;
        std::set_intersection(qa.begin(), qa.end(), qb.begin(), qb.end(), std::back_inserter(ab));
        const Clique& qc = t.clique(tr.c);
        std::set_intersection(ab.begin(), ab.end(), qc.begin(), qc.end(),
                              std::back_inserter(tr.shared));
        r.triples.push_back(std::move(tr));
      }
    }
  }
  return r;
}

}  // namespace ran

#include <doctest.h>

#include <set>

#include "ran/classify.hpp"
#include "ran/clique_tree.hpp"
#include "ran/errors.hpp"
#include "ran/fixtures.hpp"
#include "ran/generators.hpp"
#include "ran/graph.hpp"
#include "support.hpp"

using namespace ran;

namespace {

Graph shaped(const TreeShape& s, std::uint64_t seed = 3) {
  return realize_ran_from_shape(s, seed);
}

}  // namespace

TEST_CASE("label strings round trip") {
  for (Label l : {Label::Complete, Label::C0, Label::C1, Label::C2, Label::C3, Label::C4,
                  Label::C5, Label::C6, Label::C7, Label::C8}) {
    CHECK(label_from_string(to_string(l)) == l);
  }
  CHECK_FALSE(label_from_string("C9").has_value());
  CHECK_FALSE(label_from_string("").has_value());
}

TEST_CASE("small cases: complete and C0") {
  const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(classify(k4).label == Label::Complete);

  const ClassLabel c0 = classify(generate_ran(5, 1).graph);
  CHECK(c0.label == Label::C0);
  CHECK(c0.n == 5);
  CHECK(c0.simplicial_count == 2);

  const Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK_THROWS_AS(classify(p4), not_a_ran_error);
}

TEST_CASE("regular tree classes carry their ell") {
  const ClassLabel star = classify(shaped(star_shape(4)));
  CHECK(star.label == Label::C1);
  CHECK(star.n == 8);
  CHECK(star.ell == 0);
  CHECK(star.simplicial_count == 4);

  const ClassLabel gh = classify(find_fixture("goldner_harary")->graph());
  CHECK(gh.label == Label::C1);
  CHECK(gh.ell == 1);
  CHECK(gh.simplicial_count == 6);

  const ClassLabel c1l2 = classify(shaped(regular_caterpillar_shape(4, 3)));
  CHECK(c1l2.label == Label::C1);
  CHECK(c1l2.n == 14);
  CHECK(c1l2.ell == 2);

  const ClassLabel c2l0 = classify(shaped(regular_caterpillar_shape(3, 1)));
  CHECK(c2l0.label == Label::C2);
  CHECK(c2l0.n == 7);
  CHECK(c2l0.ell == 0);

  const ClassLabel c2l2 = classify(shaped(regular_caterpillar_shape(3, 3)));
  CHECK(c2l2.label == Label::C2);
  CHECK(c2l2.n == 11);
  CHECK(c2l2.ell == 2);

  const ClassLabel c3 = classify(shaped(path_shape(5)));
  CHECK(c3.label == Label::C3);
  CHECK(c3.simplicial_count == 2);
}

TEST_CASE("degree-4 counts split C4 and C5") {
  // all internal degrees <= 3, not regular: mixed path with a branch
  TreeShape mixed;
  mixed.node_count = 6;
  mixed.edges = {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}};
  const ClassLabel c4 = classify(shaped(mixed));
  CHECK(c4.label == Label::C4);
  CHECK(c4.degree4_nodes.empty());

  // one degree-4 node, decorated so the tree is not a star
  TreeShape one_hub;
  one_hub.node_count = 7;
  one_hub.edges = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}, {5, 6}};
  const ClassLabel c5 = classify(shaped(one_hub));
  CHECK(c5.label == Label::C5);
  CHECK(c5.degree4_nodes.size() == 1);
}

TEST_CASE("adjacent hubs with a breaker make C6") {
  // hubs 0 and 1 adjacent; branch 6-7 off hub 0 breaks 4-regularity
  TreeShape s;
  s.node_count = 9;
  s.edges = {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {0, 5}, {0, 6}, {6, 7}, {0, 8}};
  const ClassLabel cl = classify(shaped(s));
  CHECK(cl.label == Label::C6);
  CHECK(cl.n == 12);
  REQUIRE(cl.witness_path.has_value());
  CHECK(cl.witness_path->kind == PathKind::Fat);
  CHECK(cl.witness_path->internal_nodes.empty());
  CHECK(cl.witness_path->endpoint_intersection == 3);
}

TEST_CASE("degree-3 internals still make a fat path") {
  // hubs joined through one degree-3 internal (leaf child 3 keeps it fat)
  TreeShape s;
  s.node_count = 12;
  s.edges = {{0, 2}, {2, 1}, {2, 3},  // spine with fat internal
             {1, 4},  {1, 5}, {1, 6},  // hub 1 leaves
             {0, 7},  {0, 8},          // hub 0 leaves
             {0, 9},  {9, 10}, {10, 11}};  // breaker branch
  const ClassLabel cl = classify(shaped(s));
  CHECK(cl.label == Label::C6);
  REQUIRE(cl.witness_path.has_value());
  CHECK(cl.witness_path->kind == PathKind::Fat);
  CHECK(cl.witness_path->internal_nodes.size() == 1);
}

TEST_CASE("slim paths fall into the C7 cases or C8") {
  const ClassLabel g1 = classify(find_fixture("fig1_g1")->graph());
  CHECK(g1.label == Label::C7);
  CHECK(g1.witness_case == SlimWitnessCase::A);

  const ClassLabel g2 = classify(find_fixture("fig1_g2")->graph());
  CHECK(g2.label == Label::C7);
  CHECK(g2.witness_case == SlimWitnessCase::B);
  CHECK(!g2.witness_cliques.empty());

  const ClassLabel g3 = classify(find_fixture("fig1_g3")->graph());
  CHECK(g3.label == Label::C7);

  const ClassLabel g4 = classify(find_fixture("fig1_g4")->graph());
  CHECK(g4.label == Label::C8);

  const ClassLabel tree_example = classify(find_fixture("fig3_tree_example")->graph());
  CHECK(tree_example.label == Label::C7);
  CHECK(tree_example.witness_case == SlimWitnessCase::A);
  REQUIRE(tree_example.witness_path.has_value());
  CHECK(tree_example.witness_path->endpoint_intersection == 2);
}

TEST_CASE("classification is a partition") {
  // every sampled RAN gets exactly one label and satisfies its cardinalities
  std::mt19937_64 rng(99);
  for (int round = 0; round < 120; ++round) {
    const int n = 5 + int(uniform_below(rng, 16));
    const Graph g = generate_ran(n, rng()).graph;
    const ClassLabel cl = classify(g);
    CHECK(cl.n == n);
    const CheckReport rep = class_cardinality_checks(cl, g);
    CHECK(rep.all_ok());
    CHECK(!rep.entries.empty());
  }
}

TEST_CASE("every class is reachable and self-consistent") {
  using testsupport::instances_of;
  const struct {
    Label label;
    int want;
  } quota[] = {{Label::C1, 3}, {Label::C2, 3}, {Label::C3, 5}, {Label::C4, 5},
               {Label::C5, 5}, {Label::C6, 5}, {Label::C7, 5}, {Label::C8, 3}};
  for (const auto& q : quota) {
    const auto batch = instances_of(q.label, q.want, 5, 16, 1234);
    CHECK(int(batch.size()) == q.want);
    for (const Graph& g : batch) {
      const ClassLabel cl = classify(g);
      CHECK(cl.label == q.label);
      CHECK(class_cardinality_checks(cl, g).all_ok());
    }
  }
}

TEST_CASE("neat path scan sees fat and slim correctly") {
  // two hubs joined by a degree-2 internal: slim, intersection size follows
  // the realization
  TreeShape s;
  s.node_count = 11;
  s.edges = {{0, 2}, {2, 1},                    // slim spine
             {1, 3}, {1, 4},  {1, 5},           // hub 1 leaves
             {0, 6}, {0, 7},                    // hub 0 leaves
             {0, 8}, {8, 9},  {9, 10}};          // breaker
  const Graph g = shaped(s);
  const CliqueTree t = build_clique_tree(g);
  const auto paths = neat_paths(t);
  REQUIRE(paths.size() == 1);
  CHECK(paths[0].kind == PathKind::Slim);
  CHECK(paths[0].internal_nodes.size() == 1);

  // adjacent degree-4 hub pairs count as fat paths with no internals, but
  // regularity takes precedence in the final label
  const ClassLabel c1 = classify(shaped(regular_caterpillar_shape(4, 3)));
  CHECK(c1.label == Label::C1);
  const auto hub_pairs = neat_paths(build_clique_tree(shaped(regular_caterpillar_shape(4, 3))));
  REQUIRE(hub_pairs.size() == 2);
  for (const auto& p : hub_pairs) {
    CHECK(p.kind == PathKind::Fat);
    CHECK(p.internal_nodes.empty());
  }
}

TEST_CASE("cardinality checker rejects forged labels") {
  const Graph g = generate_ran(9, 4).graph;
  ClassLabel forged = classify(g);
  forged.label = Label::C0;  // n=9 cannot be C0
  CHECK_THROWS_AS(class_cardinality_checks(forged, g), theorem_violation);
}

TEST_CASE("triple intersections of degree-4 cliques") {
  const Graph nz = find_fixture("nishizeki")->graph();
  const TripleIntersectionReport rep = triple_intersection_report(build_clique_tree(nz));
  CHECK(rep.degree4_nodes.size() == 3);
  REQUIRE(rep.triples.size() == 1);
  CHECK(rep.triples[0].shared.size() == 1);
  CHECK(rep.pairs.size() == 3);

  const Graph f4 = find_fixture("fig4_hamiltonian")->graph();
  const TripleIntersectionReport rep4 = triple_intersection_report(build_clique_tree(f4));
  REQUIRE(rep4.triples.size() == 1);
  CHECK(rep4.triples[0].shared.empty());

  // fewer than three hubs: empty report
  CHECK(triple_intersection_report(build_clique_tree(generate_ran(6, 0).graph)).empty());
}

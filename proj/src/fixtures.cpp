#include "ran/fixtures.hpp"

#include <initializer_list>

#include "ran/errors.hpp"
#include "ran/hamilton.hpp"
#include "ran/toughness.hpp"

namespace ran {

namespace {

// Vertices arrive consecutively from 3, so a fixture is just its face list.
InsertionTrace trace_of(std::initializer_list<std::array<int, 3>> faces) {
  InsertionTrace t;
  int v = 3;
  for (const auto& f : faces) t.steps.push_back({v++, f});
  return t;
}

std::vector<Fixture> make_catalog() {
  std::vector<Fixture> fs;
  fs.push_back({"c0",
                trace_of({{0, 1, 2}, {0, 1, 3}}),
                Label::C0,
                Rational(3, 2),
                true});
  fs.push_back({"goldner_harary",
                trace_of({{0, 1, 2},
                          {0, 1, 3},
                          {0, 1, 4},
                          {0, 3, 4},
                          {1, 3, 4},
                          {0, 1, 5},
                          {0, 4, 5},
                          {1, 4, 5}}),
                Label::C1,
                Rational(5, 6),
                false});
  fs.push_back({"nishizeki",
                trace_of({{0, 1, 2},
                          {0, 1, 3},
                          {1, 3, 4},
                          {1, 4, 5},
                          {3, 4, 5},
                          {1, 3, 5},
                          {0, 2, 3},
                          {0, 3, 9},
                          {0, 3, 10},
                          {0, 9, 10},
                          {3, 9, 10},
                          {1, 2, 3},
                          {2, 3, 14},
                          {2, 3, 15},
                          {2, 14, 15},
                          {3, 14, 15}}),
                Label::C8,
                std::nullopt,
                false});
  fs.push_back({"fig4_hamiltonian",
                trace_of({{0, 1, 2},
                          {0, 1, 3},
                          {0, 3, 4},
                          {1, 3, 4},
                          {0, 1, 4},
                          {0, 1, 7},
                          {0, 7, 8},
                          {0, 8, 9},
                          {0, 9, 10},
                          {8, 9, 10},
                          {0, 8, 10},
                          {1, 7, 8},
                          {7, 8, 14},
                          {7, 8, 15},
                          {7, 14, 15},
                          {8, 14, 15}}),
                Label::C8,
                std::nullopt,
                true});
  fs.push_back({"fig1_g1",
                trace_of({{0, 1, 2},
                          {0, 1, 3},
                          {0, 1, 4},
                          {0, 3, 4},
                          {1, 3, 4},
                          {0, 4, 5},
                          {1, 4, 5},
                          {0, 4, 8},
                          {0, 4, 10},
                          {0, 4, 11},
                          {0, 10, 11},
                          {4, 10, 11}}),
                Label::C7,
                std::nullopt,
                false});
  fs.push_back({"fig1_g2",
                trace_of({{0, 1, 2},
                          {0, 1, 3},
                          {0, 1, 4},
                          {0, 3, 4},
                          {1, 3, 4},
                          {0, 4, 5},
                          {1, 4, 5},
                          {4, 5, 8},
                          {4, 5, 10},
                          {4, 10, 11},
                          {4, 5, 11},
                          {5, 10, 11}}),
                Label::C7,
                std::nullopt,
                false});
  fs.push_back({"fig1_g3",
                trace_of({{0, 1, 2},
                          {0, 1, 3},
                          {0, 1, 4},
                          {0, 3, 4},
                          {1, 3, 4},
                          {0, 4, 5},
                          {0, 5, 8},
                          {0, 4, 8},
                          {0, 4, 10},
                          {0, 4, 11},
                          {0, 10, 11},
                          {4, 10, 11}}),
                Label::C7,
                std::nullopt,
                false});
  fs.push_back({"fig1_g4",
                trace_of({{0, 1, 2},
                          {0, 1, 3},
                          {0, 1, 4},
                          {0, 3, 4},
                          {1, 3, 4},
                          {0, 4, 5},
                          {1, 4, 5},
                          {4, 5, 8},
                          {4, 8, 10},
                          {4, 8, 11},
                          {4, 10, 11},
                          {8, 10, 11}}),
                Label::C8,
                std::nullopt,
                std::nullopt});
  fs.push_back({"fig3_tree_example",
                trace_of({{0, 1, 2},
                          {0, 1, 3},
                          {0, 1, 4},
                          {1, 3, 4},
                          {0, 3, 4},
                          {0, 3, 7},
                          {0, 3, 8},
                          {0, 3, 9},
                          {0, 8, 9},
                          {3, 8, 9}}),
                Label::C7,
                std::nullopt,
                false});
  return fs;
}

}  // namespace

const std::vector<Fixture>& fixture_catalog() {
  static const std::vector<Fixture> catalog = make_catalog();
  return catalog;
}

const Fixture* find_fixture(const std::string& name) {
  for (const Fixture& f : fixture_catalog())
    if (f.name == name) return &f;
  return nullptr;
}

void verify_fixture(const Fixture& f) {
  const Graph g = f.graph();
  if (!is_ran(g)) throw theorem_violation("fixture " + f.name + " is not a RAN");
  const ClassLabel cl = classify(g);
  if (cl.label != f.expected_label)
    throw theorem_violation("fixture " + f.name + " classifies as " + to_string(cl.label) +
                            ", expected " + to_string(f.expected_label));
  class_cardinality_checks(cl, g);
  if (f.expected_toughness) {
    const Rational got = toughness_exact(g).value;
    if (got != *f.expected_toughness)
      throw theorem_violation("fixture " + f.name + " has toughness " + got.str() +
                              ", expected " + f.expected_toughness->str());
  }
  if (f.expected_hamiltonian) {
    const HamiltonResult got = hamiltonian_cycle(g);
    const bool ham = got.decision == Hamiltonicity::Hamiltonian;
    if (ham != *f.expected_hamiltonian)
      throw theorem_violation("fixture " + f.name + (ham ? " is" : " is not") +
                              " Hamiltonian, contrary to its expectation");
  }
}

}  // namespace ran

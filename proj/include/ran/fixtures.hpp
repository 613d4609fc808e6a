#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ran/classify.hpp"
#include "ran/generators.hpp"
#include "ran/graph.hpp"
#include "ran/rational.hpp"

namespace ran {

struct Fixture {
  std::string name;
  InsertionTrace trace;
  Label expected_label = Label::C8;
  std::optional<Rational> expected_toughness;  // set where a closed form pins it
  std::optional<bool> expected_hamiltonian;    // unset where the theory is silent
  Graph graph() const { return trace.replay(name); }
};

// Built-in graphs in a fixed order.
const std::vector<Fixture>& fixture_catalog();

// Lookup by name; nullptr when absent.
const Fixture* find_fixture(const std::string& name);

// Re-derives every stored expectation from scratch (RAN-ness, label, exact
// toughness where fixed, Hamiltonicity where fixed, cardinality constraints);
// throws theorem_violation on any mismatch.
void verify_fixture(const Fixture& f);

}  // namespace ran

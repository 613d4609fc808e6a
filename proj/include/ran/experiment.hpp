#pragma once

#include <string>
#include <vector>

#include "ran/classify.hpp"
#include "ran/hamilton.hpp"
#include "ran/toughness.hpp"

namespace ran {

struct ExperimentParams {
  int n_max = 16;  // random draws cycle through sizes 12..n_max
  int samples = 0;
  unsigned long long seed = 0;
  int toughness_cap = kToughnessCap;
  bool include_fixtures = true;  // fold in the two built-in C8 graphs
};

struct ExperimentRecord {
  std::string source;  // decimal generation seed, or a fixture name
  int n = 0;
  Label label = Label::C8;
  std::string toughness;  // "p/q", or "skipped" when n exceeds the cap
  Hamiltonicity hamiltonian = Hamiltonicity::Unknown;
  int degree4_count = 0;
  std::string triple_sizes;  // ';'-joined triple-intersection sizes over degree-4 cliques
  long long runtime_ms = 0;
};

struct ExperimentResult {
  ExperimentParams params;
  int generated = 0;                       // random RANs drawn
  std::vector<ExperimentRecord> records;   // the C8 members only
  std::vector<std::string> counterexamples;  // sources whose exact toughness is not 1

  // Header plus one line per record. Every column except runtime_ms is a pure
  // function of (source, n); runtime is wall-clock and varies run to run.
  std::string csv() const;
  // Human-readable status; counterexamples are always listed, and agreement is
  // reported as evidence, never as proof.
  std::string summary() const;
};

// Draws random RANs, keeps the C8 ones, and records exact toughness (within
// the cap), the Hamiltonicity decision, and degree-4 clique intersection data.
ExperimentResult run_c8_experiment(const ExperimentParams& p);

}  // namespace ran

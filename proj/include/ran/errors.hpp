#pragma once

#include <stdexcept>
#include <string>

namespace ran {

// Input data fails a structural precondition (bad edge list, malformed JSON, ...).
class validation_error : public std::invalid_argument {
 public:
  explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

// An analysis entry point was handed a graph that is not a RAN.
class not_a_ran_error : public std::runtime_error {
 public:
  explicit not_a_ran_error(const std::string& what) : std::runtime_error(what) {}
};

// An exhaustive search refused to run above its vertex cap.
class cap_exceeded_error : public std::runtime_error {
 public:
  explicit cap_exceeded_error(const std::string& what) : std::runtime_error(what) {}
};

// A checked theorem failed on concrete data; indicates a bug, not bad input.
class theorem_violation : public std::logic_error {
 public:
  explicit theorem_violation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ran

#pragma once

#include <stdexcept>
#include <string>

namespace hydrosp {

// Malformed problem data: dimension mismatches, bad indices.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Invalid user configuration (bad durations, missing cuts, unreadable files).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A solver gave up: singular bases, iteration limits, infeasible recourse.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A recourse problem without a feasible completion. Models in this library
// carry slack variables, so this indicates a modelling bug.
class InfeasibleScenarioError : public NumericalError {
 public:
  explicit InfeasibleScenarioError(int scenario)
      : NumericalError("second stage infeasible for scenario " + std::to_string(scenario)), scenario_(scenario) {}
  int scenario() const { return scenario_; }

 private:
  int scenario_;
};

// Text input that does not follow its format. Carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace hydrosp

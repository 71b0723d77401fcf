#pragma once

#include <span>
#include <vector>

#include "hydrosp/lp/branch_and_bound.hpp"
#include "hydrosp/sp/two_stage_program.hpp"

namespace hydrosp::sp {

// Monolithic minimisation problem: first-stage columns first, then one block
// of recourse columns per scenario.
struct DeterministicEquivalent {
  lp::LinearProgram lp;
  std::vector<int> binaries;
  int first_stage_columns = 0;
  std::vector<int> scenario_column_offset;
  std::vector<int> scenario_row_offset;
};

DeterministicEquivalent build_deterministic_equivalent(const FiniteProgram& fp);

struct DeterministicSolution {
  lp::SolveStatus status = lp::SolveStatus::kNumericalFailure;
  double objective = 0.0;  // user sense
  std::vector<double> x;
  std::vector<std::vector<double>> y;  // recourse primal per scenario
  bool optimal() const { return status == lp::SolveStatus::kOptimal; }
};

DeterministicSolution solve_deterministic_equivalent(const FiniteProgram& fp, const lp::MbpOptions& options = {});

struct EvaluateOptions {
  int threads = 1;
  bool keep_solutions = false;
};

struct Evaluation {
  double value = 0.0;        // c^T x + sum_s pi_s Q_s, user sense
  double first_stage = 0.0;  // c^T x, user sense
  std::vector<double> recourse;  // Q_s per scenario, user sense
  std::vector<lp::LpSolution> solutions;  // canonical, only when requested
};

// Throws std::invalid_argument when x violates the first stage by more than
// 1e-8, and InfeasibleScenarioError for a recourse problem without solution.
Evaluation evaluate_decision(const FiniteProgram& fp, std::span<const double> x, const EvaluateOptions& options = {});

// First-stage optimiser of the single-scenario problem on the mean scenario.
std::vector<double> solve_expected_value_problem(const FiniteProgram& fp, const lp::MbpOptions& options = {});

}  // namespace hydrosp::sp

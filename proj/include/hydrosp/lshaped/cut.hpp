#pragma once

#include <limits>
#include <span>
#include <vector>

#include "hydrosp/lp/simplex.hpp"
#include "hydrosp/sp/two_stage_program.hpp"

namespace hydrosp::lshaped {

// theta >= coefficients . x + intercept, in minimisation form.
struct Cut {
  std::vector<double> coefficients;
  double intercept = 0.0;
  int group = 0;
  int age = 0;  // consecutive iterations without being active

  double value(std::span<const double> x) const;
};

// Cut from an optimal solution of the canonical subproblem at x_hat. The
// subgradient is -T^T y with y the row duals; the cut is tight at x_hat.
Cut optimality_cut(const sp::Subproblem& canonical, std::span<const double> x_hat, const lp::LpSolution& solution,
                   int first_stage_size);
// Solves the subproblem at x_hat first. Throws InfeasibleScenarioError
// (scenario index -1) when the recourse has no solution.
Cut optimality_cut(const sp::Subproblem& canonical, std::span<const double> x_hat, int first_stage_size);

// Scenario s of n belongs to group floor(s * groups / n).
int group_of(int scenario, int scenarios, int groups);

// Conditional-probability average of the scenario cuts within each group.
// Groups without probability mass are skipped.
std::vector<Cut> aggregate(std::span<const Cut> cuts, std::span<const double> probabilities, int groups);

inline constexpr int kNeverConsolidate = std::numeric_limits<int>::max();

// Resets the age of cuts that are tight at (x, theta) and ages the rest.
void update_ages(std::vector<Cut>& pool, std::span<const double> x, std::span<const double> theta,
                 double tolerance = 1e-7);
// Drops cuts whose age reached age_limit. Returns the number removed.
int consolidate(std::vector<Cut>& pool, int age_limit);

}  // namespace hydrosp::lshaped

#include "hydrosp/lshaped/cut.hpp"

#include <cmath>

#include "hydrosp/errors.hpp"

namespace hydrosp::lshaped {

double Cut::value(std::span<const double> x) const {
  double v = intercept;
  for (std::size_t j = 0; j < coefficients.size(); ++j) v += coefficients[j] * x[j];
  return v;
}

Cut optimality_cut(const sp::Subproblem& canonical, std::span<const double> x_hat, const lp::LpSolution& solution,
                   int first_stage_size) {
  Cut cut;
  cut.coefficients.assign(first_stage_size, 0.0);
  for (const sp::TechnologyEntry& e : canonical.technology) {
    cut.coefficients[e.column] -= solution.dual[e.row] * e.value;
  }
  double gx = 0.0;
  for (int j = 0; j < first_stage_size; ++j) gx += cut.coefficients[j] * x_hat[j];
  cut.intercept = solution.objective - gx;
  return cut;
}

Cut optimality_cut(const sp::Subproblem& canonical, std::span<const double> x_hat, int first_stage_size) {
  lp::LinearProgram work = canonical.recourse;
  sp::apply_first_stage(canonical, x_hat, work);
  const lp::LpSolution sol = lp::solve_lp(work);
  if (sol.status == lp::SolveStatus::kInfeasible) throw InfeasibleScenarioError(-1);
  if (!sol.optimal()) throw NumericalError("subproblem solve failed: " + std::string(lp::to_string(sol.status)));
  return optimality_cut(canonical, x_hat, sol, first_stage_size);
}

int group_of(int scenario, int scenarios, int groups) {
  return static_cast<int>(static_cast<long long>(scenario) * groups / scenarios);
}

std::vector<Cut> aggregate(std::span<const Cut> cuts, std::span<const double> probabilities, int groups) {
  if (cuts.size() != probabilities.size()) throw StructuralError("one probability per cut required");
  const int n = static_cast<int>(cuts.size());
  if (groups < 1 || groups > n) throw StructuralError("group count must lie in [1, number of scenarios]");
  std::vector<double> mass(groups, 0.0);
  for (int s = 0; s < n; ++s) mass[group_of(s, n, groups)] += probabilities[s];

  std::vector<Cut> out(groups);
  for (int g = 0; g < groups; ++g) {
    out[g].group = g;
    out[g].coefficients.assign(cuts.empty() ? 0 : cuts.front().coefficients.size(), 0.0);
  }
  for (int s = 0; s < n; ++s) {
    const int g = group_of(s, n, groups);
    if (mass[g] <= 0.0) continue;
    const double w = probabilities[s] / mass[g];
    Cut& agg = out[g];
    for (std::size_t j = 0; j < agg.coefficients.size(); ++j) agg.coefficients[j] += w * cuts[s].coefficients[j];
    agg.intercept += w * cuts[s].intercept;
  }
  std::vector<Cut> kept;
  for (int g = 0; g < groups; ++g) {
    if (mass[g] > 0.0) kept.push_back(std::move(out[g]));
  }
  return kept;
}

void update_ages(std::vector<Cut>& pool, std::span<const double> x, std::span<const double> theta, double tolerance) {
  for (Cut& cut : pool) {
    const double slack = theta[cut.group] - cut.value(x);
    if (slack <= tolerance * (1.0 + std::abs(theta[cut.group]))) {
      cut.age = 0;
    } else {
      ++cut.age;
    }
  }
}

int consolidate(std::vector<Cut>& pool, int age_limit) {
  if (age_limit == kNeverConsolidate) return 0;
  const auto before = pool.size();
  std::erase_if(pool, [&](const Cut& c) { return c.age >= age_limit; });
  return static_cast<int>(before - pool.size());
}

}  // namespace hydrosp::lshaped

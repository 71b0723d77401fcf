#include "hydrosp/models/water_value.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hydrosp/errors.hpp"
#include "hydrosp/models/hydro_network_rows.hpp"

namespace hydrosp::models {

void WaterValue::validate(int plant_count) const {
  if (empty()) return;
  if (static_cast<int>(plants.size()) != plant_count) {
    throw ConfigError("water value covers " + std::to_string(plants.size()) + " plants, river has " +
                      std::to_string(plant_count));
  }
  std::vector<int> per_group(groups, 0);
  for (const WaterValueCut& c : cuts) {
    if (c.group < 0 || c.group >= groups) throw ConfigError("water value cut with group out of range");
    if (static_cast<int>(c.slope.size()) != plant_count) throw ConfigError("water value cut with wrong slope count");
    ++per_group[c.group];
  }
  for (int g = 0; g < groups; ++g) {
    if (per_group[g] == 0) throw ConfigError("water value group " + std::to_string(g) + " has no cuts");
  }
}

double WaterValue::evaluate(std::span<const double> volumes_he) const {
  std::vector<double> best(groups, std::numeric_limits<double>::infinity());
  for (const WaterValueCut& c : cuts) {
    double v = c.intercept;
    for (std::size_t h = 0; h < c.slope.size(); ++h) v += c.slope[h] * volumes_he[h];
    best[c.group] = std::min(best[c.group], v);
  }
  double total = 0.0;
  for (double b : best) total += b;
  return total;
}

std::shared_ptr<const sp::TwoStageProgram> build_week_ahead(const hydro::NetworkView& view, int periods) {
  lp::LinearProgram first;
  for (int h = 0; h < view.size(); ++h) {
    first.add_column(0.0, 0.0, view.plants[h].max_volume, "M0_" + view.plants[h].data.name);
  }
  auto generator = [view, periods](const sp::ScenarioSample& sample) {
    sp::Subproblem sub;
    NetworkOptions opts;
    opts.initial_volume_in_rhs = false;
    const NetworkColumns c = add_network(sub.recourse, view, sample, periods, opts);
    for (int t = 0; t < periods; ++t) sub.recourse.set_cost(c.P(t), sample.price[t]);
    for (int h = 0; h < view.size(); ++h) sub.technology.push_back({c.flow_row(h, 0), h, -1.0});
    return sub;
  };
  return std::make_shared<const sp::TwoStageProgram>(sp::Sense::kMaximize, std::move(first), std::vector<int>{},
                                                     std::move(generator));
}

WaterValue to_water_value(const hydro::NetworkView& view, std::span<const lshaped::Cut> cuts,
                          std::span<const double> group_probability) {
  WaterValue wv;
  wv.plants = view.network.names();
  wv.groups = static_cast<int>(group_probability.size());
  const double R = view.resolution.hours_per_period;
  for (const lshaped::Cut& c : cuts) {
    const double mass = group_probability[c.group];
    WaterValueCut out;
    out.group = c.group;
    out.intercept = -mass * c.intercept;
    out.slope.resize(c.coefficients.size());
    for (std::size_t h = 0; h < c.coefficients.size(); ++h) out.slope[h] = -mass * c.coefficients[h] / R;
    wv.cuts.push_back(std::move(out));
  }
  return wv;
}

WaterValueResult compute_water_value(const hydro::NetworkView& view, std::vector<sp::ScenarioSample> scenarios,
                                     std::span<const double> grid, const lshaped::LShapedConfig& config) {
  if (scenarios.empty()) throw ConfigError("water value needs at least one scenario");
  const int periods = scenarios.front().periods();
  auto program = build_week_ahead(view, periods);
  const sp::FiniteProgram fp = sp::FiniteProgram::uniform(program, std::move(scenarios));
  WaterValueResult out;
  out.run = lshaped::solve(fp, config);
  if (!out.run.converged) throw NumericalError("water value iterations did not converge");

  std::vector<lshaped::Cut> pool = out.run.cuts;
  const int groups = static_cast<int>(out.run.group_probability.size());
  std::vector<sp::Subproblem> subs;
  for (const sp::ScenarioSample& sample : fp.scenarios) subs.push_back(program->canonical_subproblem(sample));
  std::vector<lp::Basis> bases(fp.size());
  for (double fill : grid) {
    if (fill < 0.0 || fill > 1.0) throw ConfigError("water value grid points must lie in [0, 1]");
    std::vector<double> x(view.size());
    for (int h = 0; h < view.size(); ++h) x[h] = fill * view.plants[h].max_volume;
    std::vector<lshaped::Cut> scenario_cuts;
    for (int s = 0; s < fp.size(); ++s) {
      lp::LinearProgram work = subs[s].recourse;
      sp::apply_first_stage(subs[s], x, work);
      const lp::LpSolution sol = lp::solve_lp(work, config.master.simplex, bases[s].empty() ? nullptr : &bases[s]);
      if (sol.status == lp::SolveStatus::kInfeasible) throw InfeasibleScenarioError(s);
      if (!sol.optimal()) throw NumericalError("week-ahead recourse not solved: " + std::string(lp::to_string(sol.status)));
      bases[s] = sol.basis;
      scenario_cuts.push_back(lshaped::optimality_cut(subs[s], x, sol, view.size()));
    }
    for (lshaped::Cut& c : lshaped::aggregate(scenario_cuts, fp.probabilities, groups)) pool.push_back(std::move(c));
  }
  out.value = to_water_value(view, pool, out.run.group_probability);
  return out;
}

}  // namespace hydrosp::models

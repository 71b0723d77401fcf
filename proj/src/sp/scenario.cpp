#include "hydrosp/sp/scenario.hpp"

#include <stdexcept>

#include "hydrosp/errors.hpp"

namespace hydrosp::sp {

ScenarioSample expected_scenario(std::span<const ScenarioSample> scenarios, std::span<const double> weights) {
  if (scenarios.empty()) throw std::invalid_argument("expected_scenario needs at least one scenario");
  if (weights.size() != scenarios.size()) throw std::invalid_argument("one weight per scenario required");
  double total = 0.0;
  for (double w : weights) total += w;
  if (!(total > 0.0)) throw std::invalid_argument("scenario weights must have a positive sum");

  const ScenarioSample& first = scenarios.front();
  ScenarioSample mean;
  mean.price.assign(first.price.size(), 0.0);
  mean.inflow.assign(first.inflow.size(), {});
  for (std::size_t h = 0; h < first.inflow.size(); ++h) mean.inflow[h].assign(first.inflow[h].size(), 0.0);

  for (std::size_t s = 0; s < scenarios.size(); ++s) {
    const ScenarioSample& sc = scenarios[s];
    if (sc.price.size() != first.price.size() || sc.inflow.size() != first.inflow.size()) {
      throw StructuralError("scenario " + std::to_string(s) + " has a different shape");
    }
    const double w = weights[s] / total;
    for (std::size_t t = 0; t < sc.price.size(); ++t) mean.price[t] += w * sc.price[t];
    for (std::size_t h = 0; h < sc.inflow.size(); ++h) {
      if (sc.inflow[h].size() != first.inflow[h].size()) {
        throw StructuralError("scenario " + std::to_string(s) + " has a different shape");
      }
      for (std::size_t t = 0; t < sc.inflow[h].size(); ++t) mean.inflow[h][t] += w * sc.inflow[h][t];
    }
  }
  return mean;
}

ScenarioSample expected_scenario(std::span<const ScenarioSample> scenarios) {
  const std::vector<double> weights(scenarios.size(), 1.0);
  return expected_scenario(scenarios, weights);
}

}  // namespace hydrosp::sp

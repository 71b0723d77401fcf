#pragma once

#include <span>
#include <vector>

namespace hydrosp::sp {

// One realisation of the random data: a price per period and a local inflow
// per plant and period.
struct ScenarioSample {
  std::vector<double> price;
  std::vector<std::vector<double>> inflow;  // [plant][period]

  int periods() const { return static_cast<int>(price.size()); }
  int plants() const { return static_cast<int>(inflow.size()); }
  bool operator==(const ScenarioSample&) const = default;
};

// Component-wise probability-weighted mean. Weights are normalised by their sum.
ScenarioSample expected_scenario(std::span<const ScenarioSample> scenarios, std::span<const double> weights);
ScenarioSample expected_scenario(std::span<const ScenarioSample> scenarios);

}  // namespace hydrosp::sp

#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "hydrosp/sp/scenario.hpp"

namespace hydrosp::sp {

struct ScenarioSet {
  std::vector<ScenarioSample> scenarios;
  std::vector<double> probabilities;
};

// Columns: scenario_id, period, price, probability, then one inflow column per
// plant. The probability is written on period-0 rows only.
void write_scenarios(std::ostream& out, const ScenarioSet& set, const std::vector<std::string>& plant_names);
ScenarioSet read_scenarios(std::istream& in);

}  // namespace hydrosp::sp

#include "hydrosp/sp/scenario_csv.hpp"

#include <map>

#include "hydrosp/errors.hpp"
#include "hydrosp/util/csv.hpp"

namespace hydrosp::sp {

using util::format_double;

void write_scenarios(std::ostream& out, const ScenarioSet& set, const std::vector<std::string>& plant_names) {
  out << "scenario_id,period,price,probability";
  for (const std::string& name : plant_names) out << ",inflow_" << name;
  out << '\n';
  for (std::size_t s = 0; s < set.scenarios.size(); ++s) {
    const ScenarioSample& sc = set.scenarios[s];
    if (sc.inflow.size() != plant_names.size()) throw StructuralError("plant count mismatch in scenario output");
    for (int t = 0; t < sc.periods(); ++t) {
      out << s << ',' << t << ',' << format_double(sc.price[t]) << ',';
      if (t == 0 && s < set.probabilities.size()) out << format_double(set.probabilities[s]);
      for (const auto& inflow : sc.inflow) out << ',' << format_double(inflow[t]);
      out << '\n';
    }
  }
}

ScenarioSet read_scenarios(std::istream& in) {
  util::CsvReader csv(in);
  const int c_id = csv.require_column("scenario_id");
  const int c_period = csv.require_column("period");
  const int c_price = csv.require_column("price");
  const int c_prob = csv.column("probability");
  std::vector<int> inflow_cols;
  for (std::size_t i = 0; i < csv.header().size(); ++i) {
    if (csv.header()[i].rfind("inflow_", 0) == 0) inflow_cols.push_back(static_cast<int>(i));
  }

  std::map<long long, ScenarioSample> samples;
  std::map<long long, double> probs;
  while (csv.next()) {
    const long long id = csv.integer(c_id);
    const long long period = csv.integer(c_period);
    ScenarioSample& sc = samples[id];
    if (sc.inflow.empty()) sc.inflow.resize(inflow_cols.size());
    if (period != sc.periods()) throw ParseError("periods must be consecutive from 0 within a scenario", csv.line());
    sc.price.push_back(csv.number(c_price));
    for (std::size_t h = 0; h < inflow_cols.size(); ++h) sc.inflow[h].push_back(csv.number(inflow_cols[h]));
    if (c_prob >= 0) {
      const auto p = csv.optional_number(c_prob);
      if (p) {
        if (period != 0) throw ParseError("probability given outside period 0", csv.line());
        probs[id] = *p;
      }
    }
  }
  ScenarioSet set;
  for (auto& [id, sc] : samples) {
    set.scenarios.push_back(std::move(sc));
    const auto it = probs.find(id);
    if (it != probs.end()) set.probabilities.push_back(it->second);
  }
  if (set.probabilities.size() != set.scenarios.size()) {
    // Missing sidecar: uniform weights.
    set.probabilities.assign(set.scenarios.size(), set.scenarios.empty() ? 0.0 : 1.0 / set.scenarios.size());
  }
  return set;
}

}  // namespace hydrosp::sp

#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hydrosp/hydro/resolution.hpp"
#include "hydrosp/lshaped/lshaped.hpp"
#include "hydrosp/sp/two_stage_program.hpp"

namespace hydrosp::models {

// W_group <= intercept + slope . M with M the reservoir volumes in HE. The
// group's probability mass is already folded into the cut, so the water
// value is the sum over groups of the tightest cut in each.
struct WaterValueCut {
  int group = 0;
  double intercept = 0.0;
  std::vector<double> slope;
};

struct WaterValue {
  std::vector<std::string> plants;
  int groups = 0;
  std::vector<WaterValueCut> cuts;

  bool empty() const { return cuts.empty(); }
  // Throws ConfigError when a group has no cut or slopes have the wrong size.
  void validate(int plant_count) const;
  double evaluate(std::span<const double> volumes_he) const;
};

// Week-ahead program: first stage M_{h,0} in [0, M-bar], second stage the
// revenue-maximising schedule over `periods` periods.
std::shared_ptr<const sp::TwoStageProgram> build_week_ahead(const hydro::NetworkView& view, int periods);

struct WaterValueResult {
  WaterValue value;
  lshaped::LShapedResult run;
};

// Solves the week-ahead program by L-shaped and adds cuts generated at every
// grid fill level (fraction of M-bar applied to all plants).
WaterValueResult compute_water_value(const hydro::NetworkView& view, std::vector<sp::ScenarioSample> scenarios,
                                     std::span<const double> grid, const lshaped::LShapedConfig& config);

// Converts a minimisation-form cut pool of the week-ahead program to HE units.
WaterValue to_water_value(const hydro::NetworkView& view, std::span<const lshaped::Cut> cuts,
                          std::span<const double> group_probability);

}  // namespace hydrosp::models

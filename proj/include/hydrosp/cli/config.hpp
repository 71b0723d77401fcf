#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hydrosp/lshaped/lshaped.hpp"
#include "hydrosp/models/day_ahead.hpp"
#include "hydrosp/models/economics.hpp"
#include "hydrosp/scenarios/price_levels.hpp"
#include "hydrosp/scenarios/sampler.hpp"

namespace hydrosp::cli {

enum class ModelKind { kDayAhead, kMaintenance, kCapacity };

struct SaaSettings {
  std::vector<int> schedule{10, 50, 100, 500, 1000, 2000};
  int M = 10;
  int T = 10;
  int eev_scenarios = 1000;
  int ev_scenarios = 1000;
  double alpha = 0.05;
  double tolerance = 0.0;
};

struct DayAheadSettings {
  int hours = 24;
  int levels = 5;
  int level_samples = 1000;
  std::vector<scenarios::Block> blocks = scenarios::default_blocks();
  std::string water_value_cuts;  // empty: computed in memory
  bool ignore_water_value = false;
  models::Penalties penalties;
};

struct WaterValueSettings {
  int scenarios = 50;
  int horizon_days = 7;
  int resolution = 1;
  std::vector<double> grid{0.0, 0.25, 0.5, 0.75, 1.0};
};

struct ExperimentConfig {
  std::string river;
  int plants = 0;  // 0: every plant in the river file
  ModelKind model = ModelKind::kDayAhead;
  int scenarios = 10;
  std::uint64_t seed = 1;
  std::string output = "out";
  int horizon_days = 365;
  int resolution = 24;
  bool timings = false;
  scenarios::SamplerConfig sampler;
  lshaped::LShapedConfig solver;
  SaaSettings saa;
  DayAheadSettings day_ahead;
  std::optional<std::vector<int>> maintenance_durations;
  models::CostParams cost;
  double expansion_cap_mw = 1000.0;
  WaterValueSettings water_value;
};

std::string to_string(ModelKind kind);

// Builds a configuration from an optional JSON file followed by dot-path
// overrides such as {"solver.formulation", "single"}. Override values are
// parsed as JSON when possible and as strings otherwise. Relative river and cut
// paths in the file resolve against the file's directory. Throws ConfigError on
// unknown keys, wrong types or invalid values.
ExperimentConfig load_config(const std::string& path, const std::vector<std::pair<std::string, std::string>>& overrides);

// Every key with its default value, as pretty-printed JSON.
std::string default_config_json();

}  // namespace hydrosp::cli

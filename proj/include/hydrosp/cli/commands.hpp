#pragma once

#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hydrosp/cli/config.hpp"
#include "hydrosp/hydro/river.hpp"
#include "hydrosp/models/capacity.hpp"
#include "hydrosp/models/day_ahead.hpp"
#include "hydrosp/models/maintenance.hpp"
#include "hydrosp/models/water_value.hpp"
#include "hydrosp/saa/saa.hpp"

namespace hydrosp::cli {

enum ExitCode : int { kOk = 0, kNotConverged = 1, kConfigFailure = 2, kNumericalFailure = 3 };

class NotConverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Random streams used by the commands on top of the SAA streams.
inline constexpr std::uint64_t kLevelStream = 6;
inline constexpr std::uint64_t kWaterValueStream = 7;

struct Experiment {
  ExperimentConfig config;
  hydro::RiverNetwork river;
  std::shared_ptr<const sp::TwoStageProgram> program;
  saa::Sampler sampler;
  std::optional<models::DayAheadSpec> day_ahead;
  std::optional<models::MaintenanceSpec> maintenance;
  std::optional<models::CapacitySpec> capacity;
};

hydro::RiverNetwork load_network(const ExperimentConfig& config);

// Trains the water value on the configured week-ahead sample.
models::WaterValueResult train_water_value(const ExperimentConfig& config, const hydro::RiverNetwork& river);

// Builds the configured model. `levels` replaces the sampled price levels
// when given (used when evaluating a stored strategy).
Experiment build_experiment(const ExperimentConfig& config,
                            const std::optional<scenarios::PriceLevels>& levels = std::nullopt);

struct EvaluateInputs {
  std::string strategy;  // strategy.csv, or expansion.csv for capacity
  std::string schedule;  // maintenance only
  bool training = false; // evaluate on the solve command's scenarios
};

// Each command writes its artifacts to config.output and throws on failure.
void cmd_solve(const ExperimentConfig& config);
void cmd_saa(const ExperimentConfig& config);
void cmd_evaluate(const ExperimentConfig& config, const EvaluateInputs& inputs);
void cmd_water_value(const ExperimentConfig& config);

// Parses the command line and runs a command. Errors are reported on `err`
// as one JSON object and mapped to an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hydrosp::cli

#pragma once

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "hydrosp/models/capacity.hpp"
#include "hydrosp/models/day_ahead.hpp"
#include "hydrosp/models/maintenance.hpp"
#include "hydrosp/models/water_value.hpp"

namespace hydrosp::models {

struct BidStrategy {
  std::vector<double> independent;               // [hour]
  std::vector<std::vector<double>> dependent;    // [hour][level]
  std::vector<std::vector<double>> block;        // [block][level]
  std::vector<std::vector<double>> hour_prices;  // [hour][level]
  std::vector<std::vector<double>> block_prices; // [block][level]
};

BidStrategy extract_strategy(const BidLayout& layout, std::span<const double> x, const scenarios::PriceLevels& levels,
                             std::span<const scenarios::Block> blocks);

// Columns kind, index, level, price, volume with kind one of independent,
// dependent, block.
void write_strategy(std::ostream& out, const BidStrategy& strategy);
struct StrategyFile {
  std::vector<double> x;            // bid part of the first stage, layout.size() entries
  scenarios::PriceLevels levels;    // from the dependent rows
};

// Throws ConfigError when the file does not cover exactly the layout.
StrategyFile read_strategy(std::istream& in, const BidLayout& layout);

// Columns plant, hour, maintenance.
void write_schedule(std::ostream& out, const MaintenanceLayout& layout, std::span<const double> x,
                    const std::vector<std::string>& plant_names);
// Reads a schedule into the binary part of x (sized layout.size()).
void read_schedule(std::istream& in, const MaintenanceLayout& layout, const std::vector<std::string>& plant_names,
                   std::vector<double>& x);

// Columns plant, delta_p_mw, delta_q_m3s.
void write_expansion(std::ostream& out, const hydro::NetworkView& view, std::span<const double> x);
std::vector<double> read_expansion(std::istream& in, const hydro::NetworkView& view);

// Columns cut_id, group, intercept, slope_<plant>...
void write_cuts(std::ostream& out, const WaterValue& value);
WaterValue read_cuts(std::istream& in);

}  // namespace hydrosp::models

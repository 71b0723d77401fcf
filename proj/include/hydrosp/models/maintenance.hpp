#pragma once

#include <memory>
#include <vector>

#include "hydrosp/models/day_ahead.hpp"

namespace hydrosp::models {

struct MaintenanceSpec {
  hydro::NetworkView network;
  scenarios::PriceLevels levels;
  std::vector<int> durations;  // hours of maintenance per plant
  Penalties penalties;
};

struct MaintenanceLayout {
  BidLayout bids;
  int plants = 0;
  int s0 = 0;

  int s(int h, int t) const { return s0 + h * bids.hours + t; }
  int size() const { return s0 + plants * bids.hours; }
};

MaintenanceLayout maintenance_layout(const MaintenanceSpec& spec);

// Durations rounded from the plants' maintenance hours.
std::vector<int> maintenance_durations(const hydro::NetworkView& view);

// Max-sense program whose first stage holds hourly bids and one binary per
// plant and hour. Throws ConfigError when a duration exceeds the horizon.
std::shared_ptr<const sp::TwoStageProgram> build_maintenance(const MaintenanceSpec& spec);

}  // namespace hydrosp::models

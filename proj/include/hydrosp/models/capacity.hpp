#pragma once

#include <memory>

#include "hydrosp/hydro/resolution.hpp"
#include "hydrosp/models/economics.hpp"
#include "hydrosp/sp/two_stage_program.hpp"

namespace hydrosp::models {

struct CapacitySpec {
  hydro::NetworkView network;
  int horizon_days = 365;
  CostParams cost;
  double expansion_cap_mw = 1000.0;
};

// Periods in the horizon. Throws ConfigError unless horizon_days * 24 is a
// positive multiple of the period length.
int capacity_periods(const CapacitySpec& spec);

// Max-sense program: first stage Delta-P per plant (MW), second stage the
// revenue-maximising schedule with discharge limits scaled by the expansion.
// A non-finite unit cost fixes the expansion at zero.
std::shared_ptr<const sp::TwoStageProgram> build_capacity(const CapacitySpec& spec);

}  // namespace hydrosp::models

#pragma once

namespace hydrosp::models {

struct CostParams {
  double rate = 0.05;          // yearly interest
  double unit_cost = 0.79;     // MEur per MW installed
  double payback_years = 40.0;
};

// Interest rate over a horizon of `days`: (1 + r)^(days / 365) - 1.
double equivalent_rate(double days, double rate);

// Annuity per horizon of `days` that repays the unit cost over the payback
// period, in MEur per MW.
double equivalent_cost(double days, const CostParams& params = {});

}  // namespace hydrosp::models

#pragma once

#include <memory>
#include <span>
#include <vector>

#include "hydrosp/hydro/resolution.hpp"
#include "hydrosp/models/hydro_network_rows.hpp"
#include "hydrosp/models/water_value.hpp"
#include "hydrosp/scenarios/price_levels.hpp"
#include "hydrosp/sp/two_stage_program.hpp"

namespace hydrosp::models {

// Imbalance prices relative to the spot price: shortage bought at beta * rho,
// surplus sold at alpha * rho. Peak hours are [peak_first, peak_end) of the day.
struct Penalties {
  int peak_first = 8;
  int peak_end = 20;
  double beta_peak = 1.15;
  double alpha_peak = 0.85;
  double beta_offpeak = 1.10;
  double alpha_offpeak = 0.90;

  bool peak(int hour) const {
    const int h = hour % 24;
    return h >= peak_first && h < peak_end;
  }
  double alpha(int hour) const { return peak(hour) ? alpha_peak : alpha_offpeak; }
  double beta(int hour) const { return peak(hour) ? beta_peak : beta_offpeak; }
  // Throws ConfigError unless alpha < 1 < beta and the peak window is valid.
  void validate() const;
};

// First-stage column positions of the bid variables.
struct BidLayout {
  int hours = 0;
  int levels = 0;
  int blocks = 0;

  int xI(int t) const { return t; }
  int xD(int i, int t) const { return hours + t * levels + i; }
  int xB(int i, int b) const { return hours + levels * hours + b * levels + i; }
  int size() const { return hours + levels * hours + levels * blocks; }
};

// Adds bid columns (bounded by 2 * total capacity), monotonicity rows and the
// per-hour offer cap to `first`.
BidLayout add_bids(lp::LinearProgram& first, int hours, int levels, std::span<const scenarios::Block> blocks,
                   double capacity_mw);

double total_capacity(const hydro::NetworkView& view);

// Copy of x whose bid part meets the bid rules exactly: volumes non-negative,
// dependent curves non-decreasing in price, hourly offer within 2 * capacity.
// Only lowers or zeroes entries; meant for solver roundoff.
std::vector<double> clean_bids(const BidLayout& layout, std::span<const double> x,
                               std::span<const scenarios::Block> blocks, double capacity_mw);

struct DayAheadSpec {
  hydro::NetworkView network;
  scenarios::PriceLevels levels;
  std::vector<scenarios::Block> blocks;
  WaterValue water_value;
  // Drops the water-value term (W fixed at 0) instead of requiring cuts.
  bool ignore_water_value = false;
  Penalties penalties;
};

// Second-stage column positions.
struct DayAheadRecourse {
  int hours = 0;
  int blocks = 0;
  int y0 = 0, yb0 = 0, plus0 = 0, minus0 = 0, w0 = 0, groups = 0;
  NetworkColumns network;

  int y(int t) const { return y0 + t; }
  int yb(int b) const { return yb0 + b; }
  int plus(int t) const { return plus0 + t; }
  int minus(int t) const { return minus0 + t; }
  int W(int g) const { return w0 + g; }
};

DayAheadRecourse day_ahead_recourse_layout(const DayAheadSpec& spec);

// Max-sense program. Throws ConfigError on missing water-value cuts, level
// or block shapes that do not match, or invalid penalties.
std::shared_ptr<const sp::TwoStageProgram> build_day_ahead(const DayAheadSpec& spec);

}  // namespace hydrosp::models

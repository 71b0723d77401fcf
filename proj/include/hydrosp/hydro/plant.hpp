#pragma once

#include <string>

namespace hydrosp::hydro {

struct PlantData {
  int id = 0;
  std::string name;
  double capacity_mw = 0.0;        // P-bar
  double max_discharge = 0.0;      // Q-bar, m3/s
  double max_volume = 0.0;         // M-bar, HE
  double flow_time_discharge = 0.0;  // minutes
  double flow_time_spill = 0.0;      // minutes
  double maintenance_hours = 0.0;
  double initial_fill = 0.5;       // M_0 as a fraction of M-bar
};

// Two-segment piecewise-linear production curve. The second segment runs at
// 95% of the first segment's efficiency; together they reach P-bar exactly at
// full discharge.
struct Segments {
  double mu1 = 0.0;
  double mu2 = 0.0;
  double qbar1 = 0.0;
  double qbar2 = 0.0;
};

inline constexpr double kFirstSegmentShare = 0.75;
inline constexpr double kSecondSegmentEfficiency = 0.95;

// Throws std::invalid_argument when P-bar or Q-bar is not positive.
Segments production_segments(const PlantData& plant);

}  // namespace hydrosp::hydro

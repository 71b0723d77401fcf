#pragma once

#include <vector>

#include "hydrosp/hydro/plant.hpp"
#include "hydrosp/hydro/river.hpp"

namespace hydrosp::hydro {

struct Resolution {
  int hours_per_period = 1;

  double volume_scale() const { return 1.0 / hours_per_period; }
  double production_scale() const { return hours_per_period; }
  // Whole periods, rounding to nearest with ties toward zero.
  int periods(double minutes) const;
};

// Plant quantities in per-period units: volumes in period-equivalents
// (HE / hours_per_period), production equivalents in MWh per period per m3/s,
// flow times in whole periods.
struct PlantView {
  PlantData data;
  Segments segments;
  double max_volume = 0.0;
  double initial_volume = 0.0;
  int delay_discharge = 0;
  int delay_spill = 0;
};

struct NetworkView {
  RiverNetwork network;
  Resolution resolution;
  std::vector<PlantView> plants;

  int size() const { return static_cast<int>(plants.size()); }
};

// Throws std::invalid_argument for hours_per_period < 1.
NetworkView rescale(const RiverNetwork& network, Resolution resolution);

}  // namespace hydrosp::hydro

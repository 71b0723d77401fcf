#include "hydrosp/hydro/resolution.hpp"

#include <cmath>
#include <stdexcept>

namespace hydrosp::hydro {

int Resolution::periods(double minutes) const {
  const long long total = std::llround(minutes);
  const long long period = 60LL * hours_per_period;
  const long long whole = total / period;
  const long long rem = total % period;
  return static_cast<int>(2 * rem > period ? whole + 1 : whole);
}

NetworkView rescale(const RiverNetwork& network, Resolution resolution) {
  if (resolution.hours_per_period < 1) throw std::invalid_argument("hours_per_period must be at least 1");
  NetworkView view{network, resolution, {}};
  for (const PlantData& p : network.plants()) {
    PlantView v;
    v.data = p;
    v.segments = production_segments(p);
    v.segments.mu1 *= resolution.production_scale();
    v.segments.mu2 *= resolution.production_scale();
    v.max_volume = p.max_volume * resolution.volume_scale();
    v.initial_volume = p.initial_fill * v.max_volume;
    v.delay_discharge = resolution.periods(p.flow_time_discharge);
    v.delay_spill = resolution.periods(p.flow_time_spill);
    view.plants.push_back(v);
  }
  return view;
}

}  // namespace hydrosp::hydro

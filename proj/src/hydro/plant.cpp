#include "hydrosp/hydro/plant.hpp"

#include <stdexcept>

namespace hydrosp::hydro {

Segments production_segments(const PlantData& plant) {
  if (!(plant.max_discharge > 0.0)) throw std::invalid_argument("plant " + plant.name + " has no discharge capacity");
  if (!(plant.capacity_mw > 0.0)) throw std::invalid_argument("plant " + plant.name + " has no installed capacity");
  Segments s;
  const double second = 1.0 - kFirstSegmentShare;
  s.mu1 = plant.capacity_mw / (plant.max_discharge * (kFirstSegmentShare + kSecondSegmentEfficiency * second));
  s.mu2 = kSecondSegmentEfficiency * s.mu1;
  s.qbar1 = kFirstSegmentShare * plant.max_discharge;
  s.qbar2 = second * plant.max_discharge;
  return s;
}

}  // namespace hydrosp::hydro

#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "hydrosp/hydro/plant.hpp"

namespace hydrosp::hydro {

// Plants with a single downstream receiver each. Discharge and spillage of a
// plant both flow to its downstream plant.
class RiverNetwork {
 public:
  RiverNetwork() = default;
  // downstream[i] is the index of plant i's receiver, or -1 for a terminal.
  // Throws StructuralError on bad indices or cycles.
  RiverNetwork(std::vector<PlantData> plants, std::vector<int> downstream);

  int size() const { return static_cast<int>(plants_.size()); }
  const PlantData& plant(int i) const { return plants_[i]; }
  PlantData& plant(int i) { return plants_[i]; }
  const std::vector<PlantData>& plants() const { return plants_; }
  int downstream(int i) const { return downstream_[i]; }
  const std::vector<int>& upstream(int i) const { return upstream_[i]; }
  int index_of(std::string_view name) const;
  std::vector<std::string> names() const;

  // First `count` plants in file order, keeping edges inside the subset.
  RiverNetwork prefix(int count) const;
  // The listed plants in the given order, keeping edges inside the subset.
  RiverNetwork subset(const std::vector<int>& indices) const;

 private:
  std::vector<PlantData> plants_;
  std::vector<int> downstream_;
  std::vector<std::vector<int>> upstream_;
};

// Columns: plant_id, name, capacity_mw, max_discharge_m3s, max_volume_he,
// downstream_id (empty for a terminal), flow_time_discharge_min,
// flow_time_spill_min, maintenance_hours. Flow times may be '-' for a
// terminal plant. Optional column initial_fill.
RiverNetwork load_river(std::istream& in);
RiverNetwork load_river_file(const std::string& path);

}  // namespace hydrosp::hydro

#include "hydrosp/hydro/river.hpp"

#include <fstream>
#include <map>

#include "hydrosp/errors.hpp"
#include "hydrosp/util/csv.hpp"

namespace hydrosp::hydro {

namespace {

// Index of a plant on a downstream cycle, or -1.
int find_cycle(const std::vector<int>& downstream) {
  const int n = static_cast<int>(downstream.size());
  for (int start = 0; start < n; ++start) {
    int at = start;
    for (int steps = 0; steps <= n && at >= 0; ++steps) at = downstream[at];
    if (at >= 0) return start;
  }
  return -1;
}

}  // namespace

RiverNetwork::RiverNetwork(std::vector<PlantData> plants, std::vector<int> downstream)
    : plants_(std::move(plants)), downstream_(std::move(downstream)) {
  if (plants_.size() != downstream_.size()) throw StructuralError("one downstream entry per plant required");
  upstream_.assign(plants_.size(), {});
  for (int i = 0; i < size(); ++i) {
    const int d = downstream_[i];
    if (d < -1 || d >= size() || d == i) throw StructuralError("plant " + plants_[i].name + " has a bad downstream index");
    if (d >= 0) upstream_[d].push_back(i);
  }
  const int c = find_cycle(downstream_);
  if (c >= 0) throw StructuralError("river contains a cycle through " + plants_[c].name);
}

int RiverNetwork::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i) {
    if (plants_[i].name == name) return i;
  }
  return -1;
}

std::vector<std::string> RiverNetwork::names() const {
  std::vector<std::string> out;
  for (const PlantData& p : plants_) out.push_back(p.name);
  return out;
}

RiverNetwork RiverNetwork::prefix(int count) const {
  std::vector<int> idx;
  for (int i = 0; i < std::min(count, size()); ++i) idx.push_back(i);
  return subset(idx);
}

RiverNetwork RiverNetwork::subset(const std::vector<int>& indices) const {
  std::vector<int> where(size(), -1);
  for (std::size_t k = 0; k < indices.size(); ++k) where.at(indices[k]) = static_cast<int>(k);
  std::vector<PlantData> plants;
  std::vector<int> down;
  for (int i : indices) {
    plants.push_back(plants_[i]);
    int d = downstream_[i];
    // Skip over plants left out of the subset.
    while (d >= 0 && where[d] < 0) d = downstream_[d];
    down.push_back(d >= 0 ? where[d] : -1);
  }
  return RiverNetwork(std::move(plants), std::move(down));
}

RiverNetwork load_river(std::istream& in) {
  util::CsvReader csv(in);
  const int c_id = csv.require_column("plant_id");
  const int c_name = csv.require_column("name");
  const int c_cap = csv.require_column("capacity_mw");
  const int c_q = csv.require_column("max_discharge_m3s");
  const int c_m = csv.require_column("max_volume_he");
  const int c_down = csv.require_column("downstream_id");
  const int c_tq = csv.require_column("flow_time_discharge_min");
  const int c_ts = csv.require_column("flow_time_spill_min");
  const int c_d = csv.require_column("maintenance_hours");
  const int c_fill = csv.column("initial_fill");

  std::vector<PlantData> plants;
  std::vector<std::string> down_ref;
  std::vector<int> lines;
  std::map<std::string, int> by_id;
  while (csv.next()) {
    PlantData p;
    const std::string& id_text = csv.field(c_id);
    p.id = static_cast<int>(csv.integer(c_id));
    p.name = csv.field(c_name);
    p.capacity_mw = csv.number(c_cap);
    p.max_discharge = csv.number(c_q);
    p.max_volume = csv.number(c_m);
    p.flow_time_discharge = csv.optional_number(c_tq).value_or(0.0);
    p.flow_time_spill = csv.optional_number(c_ts).value_or(0.0);
    p.maintenance_hours = csv.number(c_d);
    if (c_fill >= 0) p.initial_fill = csv.optional_number(c_fill).value_or(0.5);
    for (double v : {p.capacity_mw, p.max_discharge, p.max_volume, p.flow_time_discharge, p.flow_time_spill,
                     p.maintenance_hours}) {
      if (v < 0.0) throw ParseError("negative parameter for plant " + p.name, csv.line());
    }
    if (p.maintenance_hours > 24.0) throw ParseError("maintenance longer than 24 hours for " + p.name, csv.line());
    if (p.initial_fill < 0.0 || p.initial_fill > 1.0) throw ParseError("initial_fill outside [0,1]", csv.line());
    if (!by_id.emplace(id_text, static_cast<int>(plants.size())).second) {
      throw ParseError("duplicate plant_id " + id_text, csv.line());
    }
    plants.push_back(std::move(p));
    down_ref.push_back(csv.field(c_down));
    lines.push_back(csv.line());
  }
  if (plants.empty()) throw ParseError("river file lists no plants", csv.line() + 1);

  std::vector<int> down(plants.size(), -1);
  for (std::size_t i = 0; i < plants.size(); ++i) {
    if (down_ref[i].empty() || down_ref[i] == "-") continue;
    const auto it = by_id.find(down_ref[i]);
    if (it == by_id.end()) {
      throw ParseError("plant " + plants[i].name + " flows to unknown plant '" + down_ref[i] + "'", lines[i]);
    }
    down[i] = it->second;
  }
  const int c = find_cycle(down);
  if (c >= 0) throw ParseError("river contains a cycle through " + plants[c].name, lines[c]);
  return RiverNetwork(std::move(plants), std::move(down));
}

RiverNetwork load_river_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open river file " + path);
  return load_river(in);
}

}  // namespace hydrosp::hydro

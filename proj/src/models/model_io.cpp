#include "hydrosp/models/model_io.hpp"

#include <algorithm>
#include <cmath>

#include "hydrosp/errors.hpp"
#include "hydrosp/util/csv.hpp"

namespace hydrosp::models {

using util::format_double;

BidStrategy extract_strategy(const BidLayout& L, std::span<const double> x, const scenarios::PriceLevels& levels,
                             std::span<const scenarios::Block> blocks) {
  if (static_cast<int>(x.size()) < L.size()) throw StructuralError("first-stage vector shorter than the bid layout");
  BidStrategy s;
  s.hour_prices = levels.hourly;
  s.block_prices = scenarios::block_price_levels(levels, blocks);
  for (int t = 0; t < L.hours; ++t) {
    s.independent.push_back(x[L.xI(t)]);
    std::vector<double> d;
    for (int i = 0; i < L.levels; ++i) d.push_back(x[L.xD(i, t)]);
    s.dependent.push_back(std::move(d));
  }
  for (int b = 0; b < L.blocks; ++b) {
    std::vector<double> v;
    for (int i = 0; i < L.levels; ++i) v.push_back(x[L.xB(i, b)]);
    s.block.push_back(std::move(v));
  }
  return s;
}

void write_strategy(std::ostream& out, const BidStrategy& s) {
  out << "# volume in MWh/h, price in Eur/MWh\n";
  out << "kind,index,level,price,volume\n";
  for (std::size_t t = 0; t < s.independent.size(); ++t) {
    out << "independent," << t << ",,," << format_double(s.independent[t]) << '\n';
  }
  for (std::size_t t = 0; t < s.dependent.size(); ++t) {
    for (std::size_t i = 0; i < s.dependent[t].size(); ++i) {
      out << "dependent," << t << ',' << i << ',' << format_double(s.hour_prices[t][i]) << ','
          << format_double(s.dependent[t][i]) << '\n';
    }
  }
  for (std::size_t b = 0; b < s.block.size(); ++b) {
    for (std::size_t i = 0; i < s.block[b].size(); ++i) {
      out << "block," << b << ',' << i << ',' << format_double(s.block_prices[b][i]) << ','
          << format_double(s.block[b][i]) << '\n';
    }
  }
}

StrategyFile read_strategy(std::istream& in, const BidLayout& L) {
  util::CsvReader csv(in);
  const int c_kind = csv.require_column("kind");
  const int c_index = csv.require_column("index");
  const int c_level = csv.require_column("level");
  const int c_price = csv.require_column("price");
  const int c_volume = csv.require_column("volume");
  StrategyFile out;
  std::vector<double>& x = out.x;
  x.assign(L.size(), 0.0);
  out.levels.hourly.assign(L.hours, std::vector<double>(L.levels, 0.0));
  std::vector<char> seen(L.size(), 0);
  int independent = 0;
  while (csv.next()) {
    const std::string& kind = csv.field(c_kind);
    const long long index = csv.integer(c_index);
    int column = -1;
    if (kind == "independent") {
      if (index < 0 || index >= L.hours) throw ConfigError("strategy hour " + std::to_string(index) + " out of range");
      column = L.xI(static_cast<int>(index));
      ++independent;
    } else if (kind == "dependent" || kind == "block") {
      const long long level = csv.integer(c_level);
      if (level < 0 || level >= L.levels) throw ConfigError("strategy level " + std::to_string(level) + " out of range");
      if (kind == "dependent") {
        if (index < 0 || index >= L.hours) throw ConfigError("strategy hour " + std::to_string(index) + " out of range");
        column = L.xD(static_cast<int>(level), static_cast<int>(index));
        out.levels.hourly[index][level] = csv.number(c_price);
      } else {
        if (index < 0 || index >= L.blocks) throw ConfigError("strategy block " + std::to_string(index) + " out of range");
        column = L.xB(static_cast<int>(level), static_cast<int>(index));
      }
    } else {
      throw ParseError("unknown strategy kind '" + kind + "'", csv.line());
    }
    if (seen[column]) throw ParseError("duplicate strategy entry", csv.line());
    seen[column] = 1;
    x[column] = csv.number(c_volume);
  }
  if (std::count(seen.begin(), seen.end(), 0) != 0) {
    throw ConfigError("strategy covers " + std::to_string(independent) + " hours with " +
                      std::to_string(std::count(seen.begin(), seen.end(), 1)) + " entries; model expects " +
                      std::to_string(L.hours) + " hours, " + std::to_string(L.levels) + " levels and " +
                      std::to_string(L.blocks) + " blocks");
  }
  for (const auto& row : out.levels.hourly) {
    for (std::size_t i = 1; i < row.size(); ++i) {
      if (row[i] < row[i - 1]) throw ConfigError("strategy price levels are not ascending");
      if (row[i] == row[i - 1]) out.levels.degenerate = true;
    }
  }
  return out;
}

void write_schedule(std::ostream& out, const MaintenanceLayout& L, std::span<const double> x,
                    const std::vector<std::string>& names) {
  out << "plant,hour,maintenance\n";
  for (int h = 0; h < L.plants; ++h) {
    for (int t = 0; t < L.bids.hours; ++t) {
      out << names[h] << ',' << t << ',' << (x[L.s(h, t)] > 0.5 ? 1 : 0) << '\n';
    }
  }
}

void read_schedule(std::istream& in, const MaintenanceLayout& L, const std::vector<std::string>& names,
                   std::vector<double>& x) {
  util::CsvReader csv(in);
  const int c_plant = csv.require_column("plant");
  const int c_hour = csv.require_column("hour");
  const int c_flag = csv.require_column("maintenance");
  x.resize(L.size(), 0.0);
  int rows = 0;
  while (csv.next()) {
    const auto it = std::find(names.begin(), names.end(), csv.field(c_plant));
    if (it == names.end()) throw ConfigError("schedule names unknown plant '" + csv.field(c_plant) + "'");
    const long long t = csv.integer(c_hour);
    if (t < 0 || t >= L.bids.hours) throw ConfigError("schedule hour " + std::to_string(t) + " out of range");
    x[L.s(static_cast<int>(it - names.begin()), static_cast<int>(t))] = csv.integer(c_flag) != 0 ? 1.0 : 0.0;
    ++rows;
  }
  if (rows != L.plants * L.bids.hours) {
    throw ConfigError("schedule has " + std::to_string(rows) + " rows, model expects " +
                      std::to_string(L.plants * L.bids.hours));
  }
}

void write_expansion(std::ostream& out, const hydro::NetworkView& view, std::span<const double> x) {
  out << "plant,delta_p_mw,delta_q_m3s\n";
  for (int h = 0; h < view.size(); ++h) {
    const hydro::PlantData& p = view.plants[h].data;
    out << p.name << ',' << format_double(x[h]) << ',' << format_double(p.max_discharge / p.capacity_mw * x[h])
        << '\n';
  }
}

std::vector<double> read_expansion(std::istream& in, const hydro::NetworkView& view) {
  util::CsvReader csv(in);
  const int c_plant = csv.require_column("plant");
  const int c_dp = csv.require_column("delta_p_mw");
  const std::vector<std::string> names = view.network.names();
  std::vector<double> x(view.size(), 0.0);
  std::vector<char> seen(view.size(), 0);
  while (csv.next()) {
    const auto it = std::find(names.begin(), names.end(), csv.field(c_plant));
    if (it == names.end()) throw ConfigError("expansion names unknown plant '" + csv.field(c_plant) + "'");
    const auto h = it - names.begin();
    seen[h] = 1;
    x[h] = csv.number(c_dp);
  }
  if (std::count(seen.begin(), seen.end(), 0) != 0) throw ConfigError("expansion plan does not cover every plant");
  return x;
}

void write_cuts(std::ostream& out, const WaterValue& value) {
  out << "# intercept in Eur, slopes in Eur/HE\n";
  out << "cut_id,group,intercept";
  for (const std::string& name : value.plants) out << ",slope_" << name;
  out << '\n';
  for (std::size_t c = 0; c < value.cuts.size(); ++c) {
    const WaterValueCut& cut = value.cuts[c];
    out << c << ',' << cut.group << ',' << format_double(cut.intercept);
    for (double s : cut.slope) out << ',' << format_double(s);
    out << '\n';
  }
}

WaterValue read_cuts(std::istream& in) {
  util::CsvReader csv(in);
  csv.require_column("cut_id");
  const int c_group = csv.column("group");
  const int c_intercept = csv.require_column("intercept");
  WaterValue wv;
  std::vector<int> slope_cols;
  for (std::size_t i = 0; i < csv.header().size(); ++i) {
    if (csv.header()[i].rfind("slope_", 0) == 0) {
      slope_cols.push_back(static_cast<int>(i));
      wv.plants.push_back(csv.header()[i].substr(6));
    }
  }
  while (csv.next()) {
    WaterValueCut cut;
    cut.group = c_group < 0 ? 0 : static_cast<int>(csv.integer(c_group));
    if (cut.group < 0) throw ParseError("negative cut group", csv.line());
    cut.intercept = csv.number(c_intercept);
    for (int c : slope_cols) cut.slope.push_back(csv.number(c));
    wv.groups = std::max(wv.groups, cut.group + 1);
    wv.cuts.push_back(std::move(cut));
  }
  return wv;
}

}  // namespace hydrosp::models

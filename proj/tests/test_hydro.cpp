#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hydrosp/errors.hpp"
#include "hydrosp/hydro/plant.hpp"
#include "hydrosp/hydro/resolution.hpp"
#include "hydrosp/hydro/river.hpp"
#include "support.hpp"

using namespace hydrosp;
using namespace hydrosp::hydro;

namespace {

struct TableRow {
  const char* name;
  double capacity, discharge, volume, tau_q, tau_s, maintenance;
};

// Skellefteälven plant data; -1 marks the terminal plant's missing flow time.
const TableRow kTable[] = {
    {"Rebnis", 64, 80, 205560, 2880, 2880, 8},    {"Sadva", 31, 70, 168000, 2880, 2880, 6},
    {"Bergnas", 8, 160, 425280, 60, 60, 8},       {"Slagnas", 7, 160, 768, 240, 240, 8},
    {"Bastusel", 100, 170, 8208, 60, 150, 4},     {"Grytfors", 31, 165, 1248, 15, 15, 4},
    {"Gallejaur", 214, 310, 3600, 30, 150, 3},    {"Vargfors", 131, 320, 4008, 180, 180, 3},
    {"Rengard", 36, 220, 1400, 180, 180, 2},      {"Batfors", 42, 280, 1330, 180, 180, 2},
    {"Finnfors", 54, 300, 300, 180, 180, 2},      {"Granfors", 40, 240, 280, 180, 180, 2},
    {"Krangfors", 62, 240, 330, 180, 180, 2},     {"Selsfors", 61, 300, 500, 180, 180, 1},
    {"Kvistforsen", 130, 300, 1120, -1, -1, 1},
};

RiverNetwork shipped() { return load_river_file(support::data_file("skelleftealven.csv")); }

RiverNetwork parse(const std::string& text) {
  std::istringstream in(text);
  return load_river(in);
}

const std::string kHeader =
    "plant_id,name,capacity_mw,max_discharge_m3s,max_volume_he,downstream_id,flow_time_discharge_min,"
    "flow_time_spill_min,maintenance_hours\n";

}  // namespace

TEST_CASE("shipped river file reproduces the plant table") {
  const RiverNetwork river = shipped();
  REQUIRE(river.size() == 15);
  for (int i = 0; i < 15; ++i) {
    const PlantData& p = river.plant(i);
    const TableRow& row = kTable[i];
    CAPTURE(row.name);
    CHECK(p.name == row.name);
    CHECK(p.capacity_mw == row.capacity);
    CHECK(p.max_discharge == row.discharge);
    CHECK(p.max_volume == row.volume);
    CHECK(p.maintenance_hours == row.maintenance);
    if (row.tau_q >= 0) {
      CHECK(p.flow_time_discharge == row.tau_q);
      CHECK(p.flow_time_spill == row.tau_s);
    }
    CHECK(p.initial_fill == 0.5);
  }
  CHECK(river.downstream(14) == -1);
  CHECK(river.downstream(0) == 2);
  CHECK(river.downstream(1) == 2);
  for (int i = 2; i < 14; ++i) CHECK(river.downstream(i) == i + 1);
  CHECK(river.index_of("Kvistforsen") == 14);
  CHECK(river.index_of("Nowhere") == -1);
}

TEST_CASE("upstream sets invert the downstream adjacency") {
  const RiverNetwork river = shipped();
  for (int h = 0; h < river.size(); ++h) {
    for (int u : river.upstream(h)) CHECK(river.downstream(u) == h);
    for (int i = 0; i < river.size(); ++i) {
      const auto& up = river.upstream(h);
      CHECK((river.downstream(i) == h) == (std::find(up.begin(), up.end(), i) != up.end()));
    }
  }
  CHECK(river.upstream(2).size() == 2);
  CHECK(river.upstream(0).empty());
}

TEST_CASE("production identity holds for every plant") {
  const RiverNetwork river = shipped();
  for (const PlantData& p : river.plants()) {
    const Segments s = production_segments(p);
    const double full = s.mu1 * s.qbar1 + s.mu2 * s.qbar2;
    CAPTURE(p.name);
    CHECK(std::abs(full - p.capacity_mw) <= 1e-12 * p.capacity_mw);
    CHECK(s.mu2 == doctest::Approx(0.95 * s.mu1).epsilon(1e-15));
    CHECK(s.qbar1 + s.qbar2 == doctest::Approx(p.max_discharge).epsilon(1e-15));
  }
}

TEST_CASE("production segment examples") {
  PlantData gallejaur{7, "Gallejaur", 214, 310, 3600, 30, 150, 3};
  const Segments g = production_segments(gallejaur);
  CHECK(g.mu1 == doctest::Approx(214.0 / (310.0 * 0.9875)).epsilon(1e-14));
  CHECK(g.mu1 == doctest::Approx(0.699061).epsilon(1e-6));
  CHECK(g.qbar1 == 232.5);
  CHECK(g.qbar2 == 77.5);

  PlantData rebnis{1, "Rebnis", 64, 80};
  CHECK(production_segments(rebnis).mu1 == doctest::Approx(64.0 / 79.0).epsilon(1e-14));
  CHECK(production_segments(rebnis).mu1 == doctest::Approx(0.810127).epsilon(1e-6));

  PlantData unit{0, "unit", 0.9875, 1.0};
  CHECK(production_segments(unit).mu1 == doctest::Approx(1.0).epsilon(1e-15));

  PlantData dry{0, "dry", 10.0, 0.0};
  CHECK_THROWS_AS(production_segments(dry), std::invalid_argument);
}

TEST_CASE("rescaling volumes, production equivalents and flow times") {
  const RiverNetwork river = shipped();
  const NetworkView hourly = rescale(river, {1});
  for (int i = 0; i < river.size(); ++i) {
    CHECK(hourly.plants[i].max_volume == river.plant(i).max_volume);
    CHECK(hourly.plants[i].segments.mu1 == production_segments(river.plant(i)).mu1);
  }
  CHECK(hourly.plants[0].delay_discharge == 48);
  CHECK(hourly.plants[5].delay_discharge == 0);  // 15 minutes rounds down

  const NetworkView daily = rescale(river, {24});
  CHECK(daily.plants[2].max_volume == 17720.0);
  CHECK(daily.plants[2].delay_discharge == 0);
  CHECK(daily.plants[0].delay_discharge == 2);
  CHECK(daily.plants[0].initial_volume == 0.5 * 205560.0 / 24.0);

  for (int hours : {1, 24, 120, 7}) {
    const NetworkView v = rescale(river, {hours});
    for (int i = 0; i < river.size(); ++i) {
      const Segments base = production_segments(river.plant(i));
      CHECK(v.plants[i].max_volume * hours == doctest::Approx(river.plant(i).max_volume).epsilon(1e-14));
      CHECK(v.plants[i].segments.mu1 / hours == doctest::Approx(base.mu1).epsilon(1e-14));
      CHECK(v.plants[i].segments.mu2 / hours == doctest::Approx(base.mu2).epsilon(1e-14));
    }
  }
  CHECK_THROWS_AS(rescale(river, {0}), std::invalid_argument);
}

TEST_CASE("flow time rounding sends ties toward zero") {
  const Resolution hour{1};
  CHECK(hour.periods(30) == 0);
  CHECK(hour.periods(31) == 1);
  CHECK(hour.periods(90) == 1);
  CHECK(hour.periods(150) == 2);
  const Resolution day{24};
  CHECK(day.periods(60) == 0);
  CHECK(day.periods(720) == 0);
  CHECK(day.periods(721) == 1);
  CHECK(day.periods(2880) == 2);
}

TEST_CASE("river loading errors") {
  SUBCASE("single plant has no upstream") {
    const RiverNetwork r = parse(kHeader + "1,Solo,10,20,100,,-,-,1\n");
    REQUIRE(r.size() == 1);
    CHECK(r.upstream(0).empty());
    CHECK(r.downstream(0) == -1);
  }
  SUBCASE("unknown downstream plant is named") {
    try {
      parse(kHeader + "1,A,10,20,100,9,60,60,1\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("'9'") != std::string::npos);
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("cycle") {
    CHECK_THROWS_AS(parse(kHeader + "1,A,10,20,100,2,60,60,1\n2,B,10,20,100,1,60,60,1\n"), ParseError);
  }
  SUBCASE("negative parameter carries its line") {
    try {
      parse(kHeader + "1,A,10,20,100,2,60,60,1\n2,B,-10,20,100,,-,-,1\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("maintenance over a day") { CHECK_THROWS_AS(parse(kHeader + "1,A,10,20,100,,-,-,25\n"), ParseError); }
  SUBCASE("missing file") { CHECK_THROWS_AS(load_river_file("/nonexistent/river.csv"), ConfigError); }
  SUBCASE("in-memory cycle") { CHECK_THROWS_AS(RiverNetwork({PlantData{}, PlantData{}}, {1, 0}), StructuralError); }
}

TEST_CASE("prefix and subset keep internal edges only") {
  const RiverNetwork river = shipped();
  const RiverNetwork head = river.prefix(3);
  REQUIRE(head.size() == 3);
  CHECK(head.downstream(0) == 2);
  CHECK(head.downstream(2) == -1);
  const RiverNetwork pick = river.subset({6, 7});
  CHECK(pick.plant(0).name == "Gallejaur");
  CHECK(pick.downstream(0) == 1);
  CHECK(pick.downstream(1) == -1);
}

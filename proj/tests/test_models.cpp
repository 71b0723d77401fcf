#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hydrosp/errors.hpp"
#include "hydrosp/lshaped/lshaped.hpp"
#include "hydrosp/models/dispatch.hpp"
#include "hydrosp/models/economics.hpp"
#include "hydrosp/models/model_io.hpp"
#include "hydrosp/sp/deterministic_equivalent.hpp"
#include "model_fixtures.hpp"

using namespace hydrosp;
using namespace hydrosp::models;

namespace {

double rel_gap(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// Annuity repaying `unit` over `years` with payments every `days`, discounted yearly at `rate`.
double present_value(double payment, double days, double years, double rate) {
  const int n = static_cast<int>(std::lround(years * 365.0 / days));
  double pv = 0.0;
  for (int k = 1; k <= n; ++k) pv += payment / std::pow(1.0 + rate, k * days / 365.0);
  return pv;
}

sp::FiniteProgram zero_volume_day_ahead() {
  hydro::RiverNetwork river({support::plant(1, "Dry", 50, 60, 500)}, {-1});
  river.plant(0).initial_fill = 0.0;
  const hydro::NetworkView view = hydro::rescale(river, {1});
  DayAheadSpec spec = fixtures::day_ahead_spec(view, 24, 3, false);
  scenarios::SamplerConfig dry;
  dry.inflow_fraction = 0.0;
  return sp::FiniteProgram::uniform(build_day_ahead(spec), fixtures::day_samples(river, 1, 8, 24, dry));
}

}  // namespace

TEST_CASE("hourly dispatch interpolates between bracketing levels") {
  const std::vector<double> levels{26.3946, 29.1451};
  const std::vector<double> volumes{636.706, 680.039};
  const double expect = 636.706 + (28.0 - 26.3946) / (29.1451 - 26.3946) * (680.039 - 636.706);
  CHECK(hourly_dispatch(28.0, levels, 0.0, volumes) == doctest::Approx(expect).epsilon(1e-14));
  CHECK(std::abs(hourly_dispatch(28.0, levels, 0.0, volumes) - 661.998) <= 1e-2);

  const std::vector<double> five{10, 20, 30, 40, 50};
  const std::vector<double> dep{1, 2, 4, 8, 16};
  CHECK(hourly_dispatch(30.0, five, 3.0, dep) == 7.0);
  CHECK(hourly_dispatch(35.0, five, 3.0, dep) == 9.0);
  CHECK(hourly_dispatch(5.0, five, 0.0, dep) == 1.0);
  CHECK(hourly_dispatch(99.0, five, 0.0, dep) == 16.0);
  CHECK_THROWS_AS(dispatch_weights(1.0, std::vector<double>{2.0, 1.0}), std::invalid_argument);
}

TEST_CASE("block dispatch accepts whole levels") {
  const std::vector<double> levels{20, 25, 30};
  const std::vector<double> volumes{5, 7, 11};
  CHECK(block_dispatch(26.0, levels, volumes) == 12.0);
  CHECK(block_dispatch(19.0, levels, volumes) == 0.0);
  CHECK(block_dispatch(31.0, levels, volumes) == 23.0);

  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> price(0.0, 60.0), vol(0.0, 20.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> prices(24);
    for (double& p : prices) p = price(rng);
    const std::vector<scenarios::Block> blocks{{0, 3}, {5, 11}, {12, 12}};
    std::vector<std::vector<double>> lv(3), vl(3);
    for (int b = 0; b < 3; ++b) {
      for (int i = 0; i < 5; ++i) {
        lv[b].push_back(price(rng));
        vl[b].push_back(vol(rng));
      }
      std::sort(lv[b].begin(), lv[b].end());
    }
    const std::vector<double> got = block_dispatch(prices, blocks, lv, vl);
    for (int b = 0; b < 3; ++b) {
      double mean = 0.0;
      for (int t = blocks[b].first; t <= blocks[b].last; ++t) mean += prices[t];
      mean /= blocks[b].last - blocks[b].first + 1;
      // Best all-or-nothing selection: enumerate subsets, keep those whose levels clear.
      double oracle = 0.0;
      for (int mask = 0; mask < 32; ++mask) {
        bool valid = true;
        double sum = 0.0;
        for (int i = 0; i < 5; ++i) {
          const bool in = mask >> i & 1;
          if (in != (lv[b][i] <= mean)) valid = false;
          if (in) sum += vl[b][i];
        }
        if (valid) oracle = sum;
      }
      CHECK(got[b] == doctest::Approx(oracle).epsilon(1e-14));
    }
  }
}

TEST_CASE("equivalent cost is an annuity") {
  const double r = 0.05, u = 0.79;
  CHECK(equivalent_rate(365, r) == doctest::Approx(0.05).epsilon(1e-15));
  const double year = u * r / (1.0 - std::pow(1.0 + r, -40.0));
  CHECK(equivalent_cost(365) == doctest::Approx(year).epsilon(1e-14));
  const double re40 = std::pow(1.05, 40.0) - 1.0;
  CHECK(equivalent_cost(40 * 365) == doctest::Approx(u * (1.0 + re40)).epsilon(1e-12));
  for (double days : {365.0, 73.0, 146.0, 10.0, 5.0}) {
    CAPTURE(days);
    CHECK(std::abs(present_value(equivalent_cost(days), days, 40.0, r) - u) <= 1e-9);
  }
  CHECK(equivalent_cost(365, {0.05, 1.58, 40}) == doctest::Approx(2 * year));
  CHECK_THROWS_AS(equivalent_cost(0.5), std::invalid_argument);
}

TEST_CASE("day-ahead first stage size and bid rows") {
  const hydro::NetworkView view = fixtures::toy_view();
  const DayAheadSpec spec = fixtures::day_ahead_spec(view, 24, 1);
  const auto program = build_day_ahead(spec);
  CHECK(program->first_stage_size() == 24 + 5 * 24 + 5 * 6);
  CHECK(program->first_stage_size() == 174);
  CHECK(program->maximize());
  for (int j = 0; j < 174; ++j) CHECK(program->first_stage().upper(j) == 2.0 * total_capacity(view));
  // 4 monotonicity rows and one cap row per hour.
  CHECK(program->first_stage().num_rows() == 24 * 5);

  DayAheadSpec no_cuts = spec;
  no_cuts.water_value = {};
  CHECK_THROWS_AS(build_day_ahead(no_cuts), ConfigError);
  no_cuts.ignore_water_value = true;
  CHECK_NOTHROW(build_day_ahead(no_cuts));
  DayAheadSpec bad = spec;
  bad.penalties.alpha_peak = 1.2;
  CHECK_THROWS_AS(build_day_ahead(bad), ConfigError);
}

TEST_CASE("bid cleanup removes roundoff and keeps feasible bids") {
  const hydro::NetworkView view = fixtures::toy_view();
  const DayAheadSpec spec = fixtures::day_ahead_spec(view, 24, 1);
  const BidLayout L{24, 5, 6};
  const double cap = total_capacity(view);
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0), noise(-1e-8, 1e-8);
  for (int trial = 0; trial < 50; ++trial) {
    // A feasible strategy with integer volumes, so cap sums are exact.
    std::vector<double> x(L.size() + 3, 7.0);
    for (int t = 0; t < L.hours; ++t) {
      x[L.xI(t)] = std::floor(0.5 * cap * u(rng));
      double level = 0.0;
      for (int i = 0; i < L.levels; ++i) x[L.xD(i, t)] = level += std::floor(0.1 * cap * u(rng));
    }
    for (int b = 0; b < L.blocks; ++b) {
      for (int i = 0; i < L.levels; ++i) x[L.xB(i, b)] = std::floor(0.05 * cap * u(rng));
    }
    if (trial == 0) {
      // Sitting exactly on the cap.
      for (int t = 0; t < 4; ++t) {
        x[L.xI(t)] = 2.0 * cap - x[L.xD(L.levels - 1, t)];
        for (int i = 0; i < L.levels; ++i) x[L.xI(t)] -= x[L.xB(i, 0)];
      }
    }
    REQUIRE(fixtures::bid_violation(L, x, spec.blocks, cap) <= 0.0);
    CHECK(clean_bids(L, x, spec.blocks, cap) == x);

    std::vector<double> noisy = x;
    for (int j = 0; j < L.size(); ++j) noisy[j] += noise(rng);
    const std::vector<double> clean = clean_bids(L, noisy, spec.blocks, cap);
    // Exact up to the summation order of the hourly offer.
    CHECK(fixtures::bid_violation(L, clean, spec.blocks, cap) <= 1e-12 * cap);
    double moved = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      CHECK(clean[j] <= std::max(0.0, noisy[j]));
      moved = std::max(moved, std::abs(clean[j] - noisy[j]));
    }
    CHECK(moved <= 1e-7);
    CHECK(clean[L.size()] == 7.0);
  }
  CHECK_THROWS_AS(clean_bids(L, std::vector<double>(3, 0.0), spec.blocks, cap), StructuralError);
}

TEST_CASE("day-ahead without water earns nothing") {
  const sp::FiniteProgram fp = zero_volume_day_ahead();
  const sp::DeterministicSolution de = sp::solve_deterministic_equivalent(fp);
  REQUIRE(de.optimal());
  CHECK(std::abs(de.objective) <= 1e-9);
  const lshaped::LShapedResult ls = lshaped::solve(fp);
  REQUIRE(ls.converged);
  CHECK(std::abs(ls.objective) <= 1e-6);
  sp::EvaluateOptions keep;
  keep.keep_solutions = true;
  const sp::Evaluation ev = sp::evaluate_decision(fp, ls.x, keep);
  const DayAheadRecourse r = day_ahead_recourse_layout(fixtures::day_ahead_spec(fixtures::toy_view(1), 24, 3, false));
  for (int t = 0; t < 24; ++t) CHECK(std::abs(ev.solutions[0].primal[r.network.P(t)]) <= 1e-9);
}

TEST_CASE("day-ahead L-shaped matches the deterministic equivalent with physical invariants") {
  const hydro::NetworkView view = fixtures::toy_view();
  const DayAheadSpec spec = fixtures::day_ahead_spec(view, 24, 5);
  const auto samples = fixtures::day_samples(view.network, 5, 77);
  const sp::FiniteProgram fp = sp::FiniteProgram::uniform(build_day_ahead(spec), samples);
  const sp::DeterministicSolution de = sp::solve_deterministic_equivalent(fp);
  REQUIRE(de.optimal());
  const lshaped::LShapedResult ls = lshaped::solve(fp);
  REQUIRE(ls.converged);
  CHECK(rel_gap(ls.objective, de.objective) <= 1e-6);

  const BidLayout bids{24, 5, 6};
  CHECK(fixtures::bid_violation(bids, ls.x, spec.blocks, total_capacity(view)) <= 1e-9);
  sp::EvaluateOptions keep;
  keep.keep_solutions = true;
  const sp::Evaluation ev = sp::evaluate_decision(fp, ls.x, keep);
  CHECK(rel_gap(ev.value, ls.objective) <= 1e-9);
  const DayAheadRecourse r = day_ahead_recourse_layout(spec);
  const auto m0 = fixtures::initial_volumes(view);
  for (int s = 0; s < fp.size(); ++s) {
    const auto& y = ev.solutions[s].primal;
    CHECK(fixtures::mass_balance_residual(view, samples[s], r.network, y, m0) <= 1e-8);
    CHECK(fixtures::production_residual(view, r.network, y) <= 1e-9);
    CHECK(fixtures::load_residual(r, spec.blocks, y) <= 1e-9);
    // Every group's W sits on its tightest cut.
    std::vector<double> end(view.size());
    for (int h = 0; h < view.size(); ++h) end[h] = y[r.network.M(h, 23)];
    double w = 0.0;
    for (int g = 0; g < r.groups; ++g) w += y[r.W(g)];
    CHECK(w == doctest::Approx(spec.water_value.evaluate(end)).epsilon(1e-9));
  }
}

TEST_CASE("maintenance optimum equals schedule enumeration") {
  const hydro::NetworkView view = fixtures::toy_view(2);
  const std::vector<int> durations{2, 1};
  const MaintenanceSpec spec = fixtures::maintenance_spec(view, 6, 4, durations);
  const auto samples = fixtures::day_samples(view.network, 3, 19, 6);
  const sp::FiniteProgram fp = sp::FiniteProgram::uniform(build_maintenance(spec), samples);
  const MaintenanceLayout L = maintenance_layout(spec);
  CHECK(L.size() == 6 + 5 * 6 + 2 * 6);

  const double brute = fixtures::brute_force_maintenance(fp, L, durations);
  const sp::DeterministicSolution de = sp::solve_deterministic_equivalent(fp);
  REQUIRE(de.optimal());
  const lshaped::LShapedResult ls = lshaped::solve(fp);
  REQUIRE(ls.converged);
  CHECK(rel_gap(de.objective, brute) <= 1e-6);
  CHECK(rel_gap(ls.objective, brute) <= 1e-6);
  CHECK(fixtures::schedule_valid(L, ls.x, durations));
  CHECK(fixtures::schedule_valid(L, de.x, durations));
  CHECK(fixtures::bid_violation(L.bids, ls.x, {}, total_capacity(view)) <= 1e-9);

  sp::EvaluateOptions keep;
  keep.keep_solutions = true;
  const sp::Evaluation ev = sp::evaluate_decision(fp, ls.x, keep);
  NetworkColumns net;
  net.plants = 2;
  net.periods = 6;
  net.q0 = 3 * 6;
  net.s0 = net.q0 + 2 * 2 * 6;
  net.m0 = net.s0 + 2 * 6;
  net.p0 = net.m0 + 2 * 6;
  for (int s = 0; s < fp.size(); ++s) {
    const auto& y = ev.solutions[s].primal;
    CHECK(fixtures::mass_balance_residual(view, samples[s], net, y, fixtures::initial_volumes(view)) <= 1e-8);
    CHECK(fixtures::production_residual(view, net, y) <= 1e-9);
    for (int h = 0; h < 2; ++h) {
      for (int t = 0; t < 6; ++t) {
        if (ls.x[L.s(h, t)] == 1.0) {
          CHECK(y[net.Q(h, 0, t)] <= 1e-9);
          CHECK(y[net.Q(h, 1, t)] <= 1e-9);
        }
      }
    }
    // y - P = y+ - y-
    for (int t = 0; t < 6; ++t) {
      CHECK(std::abs(y[t] - y[net.P(t)] - y[6 + t] + y[12 + t]) <= 1e-9);
    }
  }
}

TEST_CASE("maintenance without durations is the plain day-ahead problem") {
  const hydro::NetworkView view = fixtures::toy_view(2);
  const MaintenanceSpec spec = fixtures::maintenance_spec(view, 8, 6, {0, 0});
  DayAheadSpec plain;
  plain.network = view;
  plain.levels = spec.levels;
  plain.ignore_water_value = true;
  const auto samples = fixtures::day_samples(view.network, 3, 21, 8);
  const auto a = sp::solve_deterministic_equivalent(sp::FiniteProgram::uniform(build_maintenance(spec), samples));
  const auto b = sp::solve_deterministic_equivalent(sp::FiniteProgram::uniform(build_day_ahead(plain), samples));
  REQUIRE(a.optimal());
  REQUIRE(b.optimal());
  CHECK(std::abs(a.objective - b.objective) <= 1e-8 * std::max(1.0, std::abs(b.objective)));
}

TEST_CASE("maintenance rejects durations beyond the horizon") {
  const hydro::NetworkView view = fixtures::toy_view(2);
  CHECK_THROWS_AS(build_maintenance(fixtures::maintenance_spec(view, 4, 1, {5, 1})), ConfigError);
  CHECK_THROWS_AS(build_maintenance(fixtures::maintenance_spec(view, 4, 1, {1})), ConfigError);
  CHECK(maintenance_durations(hydro::rescale(fixtures::toy_river(), {1})) == std::vector<int>{2, 1, 1});
}

TEST_CASE("capacity expansion: decomposition, cost dominance and cap monotonicity") {
  const hydro::NetworkView view = fixtures::toy_view(2, 24);
  CapacitySpec spec{view, 30, {}};
  const scenarios::ScenarioSampler sampler({}, view.network);
  const auto samples = sampler.draw_capacity_horizon(5, 3, 30, {24});
  CHECK(capacity_periods(spec) == 30);
  const sp::FiniteProgram fp = sp::FiniteProgram::uniform(build_capacity(spec), samples);
  const sp::DeterministicSolution de = sp::solve_deterministic_equivalent(fp);
  REQUIRE(de.optimal());
  const lshaped::LShapedResult ls = lshaped::solve(fp);
  REQUIRE(ls.converged);
  CHECK(rel_gap(ls.objective, de.objective) <= 1e-6);

  // Cheap expansion so that the cap binds.
  CapacitySpec cheap = spec;
  cheap.cost.unit_cost = 0.001;
  double previous = -lp::kInfinity;
  for (double cap : {0.0, 100.0, 1000.0}) {
    cheap.expansion_cap_mw = cap;
    const auto sol = sp::solve_deterministic_equivalent(sp::FiniteProgram::uniform(build_capacity(cheap), samples));
    REQUIRE(sol.optimal());
    CHECK(sol.objective >= previous - 1e-9 * std::abs(sol.objective));
    previous = sol.objective;
    double total = 0.0;
    for (double d : sol.x) total += d;
    CHECK(total <= cap + 1e-9);
  }

  CapacitySpec frozen = spec;
  frozen.cost.unit_cost = std::numeric_limits<double>::infinity();
  const auto none = lshaped::solve(sp::FiniteProgram::uniform(build_capacity(frozen), samples));
  REQUIRE(none.converged);
  for (double d : none.x) CHECK(std::abs(d) <= 1e-6);
  CapacitySpec zero = spec;
  zero.expansion_cap_mw = 0.0;
  const auto fixed = sp::solve_deterministic_equivalent(sp::FiniteProgram::uniform(build_capacity(zero), samples));
  CHECK(fixed.objective == doctest::Approx(none.objective).epsilon(1e-6));
  CHECK(de.objective >= fixed.objective - 1e-9 * std::abs(fixed.objective));

  CapacitySpec uneven{hydro::rescale(view.network, {120}), 7, {}};
  CHECK_THROWS_AS(capacity_periods(uneven), ConfigError);
  uneven.horizon_days = 10;
  CHECK(capacity_periods(uneven) == 2);
  CHECK(capacity_periods(CapacitySpec{hydro::rescale(view.network, {24}), 365, {}}) == 365);
}

TEST_CASE("expansion raises discharge limits in proportion") {
  const hydro::NetworkView view = fixtures::toy_view(1, 24);
  CapacitySpec spec{view, 2, {}};
  const auto program = build_capacity(spec);
  const sp::ScenarioSample s = scenarios::ScenarioSampler({}, view.network).sample_capacity_horizon(1, 2, {24});
  const sp::Subproblem sub = program->subproblem(s);
  // Q rows follow flow and production rows; each links one segment to Delta-P.
  const double ratio = view.plants[0].data.max_discharge / view.plants[0].data.capacity_mw;
  int seen = 0;
  for (const sp::TechnologyEntry& e : sub.technology) {
    CHECK(e.column == 0);
    const double qbar = sub.recourse.rhs(e.row);
    CHECK(-e.value == doctest::Approx(qbar / view.plants[0].data.max_discharge * ratio));
    ++seen;
  }
  CHECK(seen == 2 * 2);
  CHECK(program->first_stage().cost(0) == doctest::Approx(-1e6 * equivalent_cost(2)));
}

TEST_CASE("single reservoir water value is the discharge value of the water") {
  hydro::RiverNetwork river({support::plant(1, "Solo", 40, 10, 100)}, {-1});
  const hydro::NetworkView view = hydro::rescale(river, {1});
  const double price = 25.0;
  sp::ScenarioSample s{std::vector<double>(24, price), {std::vector<double>(24, 0.0)}};
  const std::vector<double> grid{0.25, 0.5, 0.75};
  const WaterValueResult wv = compute_water_value(view, {s}, grid, {});
  const double mu1 = view.plants[0].segments.mu1;
  for (double m : {10.0, 37.5, 60.0, 90.0}) {
    const std::vector<double> vol{m};
    CHECK(wv.value.evaluate(vol) == doctest::Approx(mu1 * price * m).epsilon(1e-9));
    const WaterValueCut* tight = nullptr;
    double best = lp::kInfinity;
    for (const WaterValueCut& c : wv.value.cuts) {
      const double v = c.intercept + c.slope[0] * m;
      if (v < best) best = v, tight = &c;
    }
    CHECK(std::abs(tight->slope[0] - mu1 * price) <= 1e-6);
  }

  sp::ScenarioSample free{std::vector<double>(24, 0.0), {std::vector<double>(24, 1.0)}};
  const WaterValueResult zero = compute_water_value(view, {free, free}, grid, {});
  for (const WaterValueCut& c : zero.value.cuts) {
    CHECK(std::abs(c.slope[0]) <= 1e-9);
    CHECK(c.intercept <= 1e-9);
  }
}

TEST_CASE("water value cuts over-estimate the week-ahead value") {
  const hydro::NetworkView view = fixtures::toy_view(3, 24);
  const auto samples = scenarios::ScenarioSampler({}, view.network).draw_horizon(4, 5, 7, {24});
  lshaped::LShapedConfig cfg;
  const std::vector<double> grid{0.0, 0.5, 1.0};
  const WaterValueResult wv = compute_water_value(view, samples, grid, cfg);
  const sp::FiniteProgram fp = sp::FiniteProgram::uniform(build_week_ahead(view, 7), samples);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> fill(0.0, 1.0);
  for (int k = 0; k < 20; ++k) {
    std::vector<double> x(3), he(3);
    for (int h = 0; h < 3; ++h) {
      x[h] = fill(rng) * view.plants[h].max_volume;
      he[h] = x[h] * 24;
    }
    const double direct = sp::evaluate_decision(fp, x).value;
    CHECK(wv.value.evaluate(he) >= direct - 1e-6 * std::max(1.0, std::abs(direct)));
  }
  CHECK_THROWS_AS(compute_water_value(view, samples, std::vector<double>{1.5}, cfg), ConfigError);
}

TEST_CASE("strategy, schedule, expansion and cut files round-trip") {
  const hydro::NetworkView view = fixtures::toy_view();
  const DayAheadSpec spec = fixtures::day_ahead_spec(view, 24, 5);
  const BidLayout L{24, 5, 6};
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 50.0);
  std::vector<double> x(L.size());
  for (double& v : x) v = u(rng);
  const BidStrategy strategy = extract_strategy(L, x, spec.levels, spec.blocks);
  std::stringstream file;
  write_strategy(file, strategy);
  const std::string text = file.str();
  CHECK(text.rfind("# ", 0) == 0);
  const StrategyFile back = read_strategy(file, L);
  CHECK(back.x == x);
  CHECK(back.levels.hourly == spec.levels.hourly);

  // Dropping the last hour leaves the layout uncovered.
  std::stringstream short_file;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind("independent,23,", 0) == 0 || line.rfind("dependent,23,", 0) == 0) continue;
    short_file << line << '\n';
  }
  CHECK_THROWS_AS(read_strategy(short_file, L), ConfigError);

  const MaintenanceSpec mspec = fixtures::maintenance_spec(fixtures::toy_view(2), 6, 4, {2, 1});
  const MaintenanceLayout ML = maintenance_layout(mspec);
  std::vector<double> mx(ML.size(), 0.0);
  mx[ML.s(0, 2)] = mx[ML.s(0, 3)] = mx[ML.s(1, 5)] = 1.0;
  std::stringstream sched;
  const std::vector<std::string> names{"Upper", "Middle"};
  write_schedule(sched, ML, mx, names);
  std::vector<double> my(ML.size(), 0.0);
  read_schedule(sched, ML, names, my);
  CHECK(my == mx);

  std::stringstream plan;
  const std::vector<double> dp{12.5, 0.0, 3.25};
  write_expansion(plan, view, dp);
  CHECK(read_expansion(plan, view) == dp);

  const WaterValue wv = fixtures::synthetic_water_value(view, 2, 31.7);
  std::stringstream cuts;
  write_cuts(cuts, wv);
  const WaterValue wv2 = read_cuts(cuts);
  CHECK(wv2.plants == wv.plants);
  CHECK(wv2.groups == wv.groups);
  REQUIRE(wv2.cuts.size() == wv.cuts.size());
  for (std::size_t i = 0; i < wv.cuts.size(); ++i) {
    CHECK(wv2.cuts[i].group == wv.cuts[i].group);
    CHECK(wv2.cuts[i].intercept == wv.cuts[i].intercept);
    CHECK(wv2.cuts[i].slope == wv.cuts[i].slope);
  }
}

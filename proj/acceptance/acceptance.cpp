#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hydrosp/lshaped/lshaped.hpp"
#include "hydrosp/models/dispatch.hpp"
#include "hydrosp/models/economics.hpp"
#include "hydrosp/models/model_io.hpp"
#include "hydrosp/saa/saa.hpp"
#include "hydrosp/sp/deterministic_equivalent.hpp"
#include "model_fixtures.hpp"
#include "saa_fixtures.hpp"

using namespace hydrosp;
using namespace hydrosp::models;
namespace fs = std::filesystem;

namespace {

// Tolerances and sizes, one block per criterion.
namespace tol {
constexpr double kOracle = 1e-6;             // 1: relative, L-shaped vs deterministic equivalent
constexpr double kOracleSeconds = 60.0;
constexpr int kInstancesPerFamily = 20;
constexpr double kFormulation = 1e-6;        // 2: relative
constexpr double kFormulationSeconds = 120.0;
constexpr int kCoverageReps = 100;           // 3
constexpr int kCoverageRequired = 90;
constexpr int kWidthReps = 10;
constexpr double kSaaSeconds = 300.0;
constexpr double kVss = 1e-8;                // 4: VRP >= EEV slack, relative
constexpr double kMassBalance = 1e-8;        // 5: HE
constexpr double kProductionIdentity = 1e-12;  // relative
constexpr double kLoadBalance = 1e-9;
constexpr double kBidCap = 1e-9;
constexpr double kFigureDispatch = 1e-2;     // 6
constexpr double kBlockDispatch = 1e-12;
constexpr int kBlockCases = 100;
constexpr double kEquivalentCost365 = 0.046043;  // 7: MEur/MW/yr
constexpr double kEquivalentCostTol = 1e-6;
constexpr double kPresentValueTol = 1e-9;
constexpr double kEnvelope = 1e-6;           // 8
constexpr double kSlope = 1e-6;
constexpr int kEnvelopePoints = 20;
}  // namespace tol

std::string num(double v) {
  std::ostringstream s;
  s << std::setprecision(10) << v;
  return s.str();
}

double rel_gap(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

class Verdict {
 public:
  Verdict(int id, std::string title) : id_(id), title_(std::move(title)) {}

  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 20) failures_.push_back(what);
    failed_ += !ok;
  }
  void note(const std::string& text) { notes_.push_back(text); }

  ~Verdict() {
    const bool unwinding = std::uncaught_exceptions() > exceptions_;
    if (unwinding) expect(false, "aborted by an exception");
    std::cout << "criterion " << id_ << ": " << (failed_ == 0 ? "PASS" : "FAIL") << "  " << title_ << " [" << checks_
              << " checks";
    for (const std::string& n : notes_) std::cout << "; " << n;
    std::cout << "]\n";
    for (const std::string& f : failures_) std::cout << "    failed: " << f << '\n';
    std::cout.flush();
    if (!unwinding) CHECK_MESSAGE(failed_ == 0, "criterion " << id_ << " failed " << failed_ << " of " << checks_ << " checks");
  }

 private:
  int id_;
  std::string title_;
  int checks_ = 0, failed_ = 0;
  int exceptions_ = std::uncaught_exceptions();
  std::vector<std::string> failures_, notes_;
};

struct Instance {
  std::string name;
  sp::FiniteProgram fp;
};

Instance random_day_ahead(std::mt19937_64& rng, int k) {
  const int plants = std::uniform_int_distribution<int>(1, 3)(rng);
  const int hours = 4 * std::uniform_int_distribution<int>(1, 6)(rng);
  const int n = std::uniform_int_distribution<int>(2, 10)(rng);
  const hydro::NetworkView view = hydro::rescale(fixtures::random_river(rng, plants), {1});
  models::DayAheadSpec spec = fixtures::day_ahead_spec(view, hours, 100 + k, k % 4 != 0);
  const auto samples = fixtures::day_samples(view.network, n, 200 + k, hours);
  return {"day-ahead #" + std::to_string(k) + " (" + std::to_string(plants) + " plants, " + std::to_string(hours) +
              " h, " + std::to_string(n) + " scenarios)",
          sp::FiniteProgram::uniform(build_day_ahead(spec), samples)};
}

struct MaintenanceInstance {
  Instance instance;
  MaintenanceLayout layout;
  std::vector<int> durations;
};

MaintenanceInstance random_maintenance(std::mt19937_64& rng, int k) {
  const int plants = std::uniform_int_distribution<int>(1, 2)(rng);
  const int hours = std::uniform_int_distribution<int>(4, 8)(rng);
  const int n = std::uniform_int_distribution<int>(2, 4)(rng);
  const hydro::NetworkView view = hydro::rescale(fixtures::random_river(rng, plants), {1});
  std::vector<int> durations;
  for (int h = 0; h < plants; ++h) durations.push_back(std::uniform_int_distribution<int>(0, 3)(rng));
  const MaintenanceSpec spec = fixtures::maintenance_spec(view, hours, 300 + k, durations);
  const auto samples = fixtures::day_samples(view.network, n, 400 + k, hours);
  return {{"maintenance #" + std::to_string(k) + " (" + std::to_string(plants) + " plants, " + std::to_string(hours) +
               " h, " + std::to_string(n) + " scenarios)",
           sp::FiniteProgram::uniform(build_maintenance(spec), samples)},
          maintenance_layout(spec),
          durations};
}

Instance random_capacity(std::mt19937_64& rng, int k) {
  const int plants = std::uniform_int_distribution<int>(1, 3)(rng);
  const int resolution = std::vector<int>{6, 12, 24}[std::uniform_int_distribution<int>(0, 2)(rng)];
  const int days = std::uniform_int_distribution<int>(1, resolution)(rng);
  const int n = std::uniform_int_distribution<int>(2, 10)(rng);
  const hydro::NetworkView view = hydro::rescale(fixtures::random_river(rng, plants), {resolution});
  CapacitySpec spec{view, days, {}};
  spec.cost.unit_cost = std::exp(std::uniform_real_distribution<double>(std::log(1e-4), std::log(0.79))(rng));
  spec.expansion_cap_mw = std::uniform_real_distribution<double>(0.0, 200.0)(rng);
  const auto samples =
      scenarios::ScenarioSampler({}, view.network).draw_capacity_horizon(n, 500 + k, days, {resolution});
  return {"capacity #" + std::to_string(k) + " (" + std::to_string(plants) + " plants, " +
              std::to_string(capacity_periods(spec)) + " periods, " + std::to_string(n) + " scenarios)",
          sp::FiniteProgram::uniform(build_capacity(spec), samples)};
}

// Day-ahead toy used by the cross-formulation run.
// Three-plant chain over a half day with three four-hour blocks.
sp::FiniteProgram day_ahead_toy(int scenarios) {
  const int hours = 12;
  const hydro::NetworkView view = fixtures::toy_view();
  return sp::FiniteProgram::uniform(build_day_ahead(fixtures::day_ahead_spec(view, hours, 5)),
                                    fixtures::day_samples(view.network, scenarios, 2024, hours));
}

// First-stage vector as the CLI emits it: cleaned bids written to and read
// back from a strategy file; non-bid entries are kept.
std::vector<double> emitted(const BidLayout& L, std::span<const double> x, const scenarios::PriceLevels& levels,
                            std::span<const scenarios::Block> blocks, double capacity_mw) {
  std::vector<double> out = clean_bids(L, x, blocks, capacity_mw);
  std::stringstream file;
  write_strategy(file, extract_strategy(L, out, levels, blocks));
  const StrategyFile back = read_strategy(file, L);
  std::copy(back.x.begin(), back.x.end(), out.begin());
  return out;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("criterion 1: L-shaped equals the deterministic equivalent on random instances") {
  Verdict v(1, "oracle equivalence on random day-ahead, maintenance and capacity instances");
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20240601);
  int solved = 0;
  for (int k = 0; k < tol::kInstancesPerFamily; ++k) {
    for (Instance inst : {random_day_ahead(rng, k), random_capacity(rng, k)}) {
      const sp::DeterministicSolution de = sp::solve_deterministic_equivalent(inst.fp);
      const lshaped::LShapedResult ls = lshaped::solve(inst.fp);
      v.expect(de.optimal() && ls.converged, inst.name + " did not solve");
      v.expect(rel_gap(ls.objective, de.objective) <= tol::kOracle,
               inst.name + ": L-shaped " + num(ls.objective) + " vs DE " + num(de.objective));
      ++solved;
    }
    MaintenanceInstance m = random_maintenance(rng, k);
    const sp::DeterministicSolution de = sp::solve_deterministic_equivalent(m.instance.fp);
    const lshaped::LShapedResult ls = lshaped::solve(m.instance.fp);
    const double brute = fixtures::brute_force_maintenance(m.instance.fp, m.layout, m.durations);
    v.expect(de.optimal() && ls.converged, m.instance.name + " did not solve");
    v.expect(rel_gap(ls.objective, de.objective) <= tol::kOracle,
             m.instance.name + ": L-shaped " + num(ls.objective) + " vs DE " + num(de.objective));
    v.expect(rel_gap(ls.objective, brute) <= tol::kOracle,
             m.instance.name + ": L-shaped " + num(ls.objective) + " vs enumeration " + num(brute));
    v.expect(fixtures::schedule_valid(m.layout, ls.x, m.durations), m.instance.name + ": invalid schedule");
    ++solved;
  }
  const double elapsed = seconds_since(start);
  v.expect(elapsed < tol::kOracleSeconds, "runtime " + num(elapsed) + " s");
  v.note(std::to_string(solved) + " instances");
  v.note(num(elapsed) + " s");
}

TEST_CASE("criterion 2: every formulation reaches the same optimum") {
  Verdict v(2, "multi, single, partial cuts; consolidation ages 2 and never; trust region on and off");
  const auto start = std::chrono::steady_clock::now();
  const int N = 50;
  const sp::FiniteProgram fp = day_ahead_toy(N);
  const sp::DeterministicSolution de = sp::solve_deterministic_equivalent(fp);
  v.expect(de.optimal(), "deterministic equivalent did not solve");
  struct Variant {
    const char* name;
    lshaped::Formulation formulation;
    int groups;
  };
  const Variant variants[] = {{"multi", lshaped::Formulation::kMultiCut, 1},
                              {"single", lshaped::Formulation::kSingleCut, 1},
                              {"partial", lshaped::Formulation::kPartial, (N + 3) / 4}};
  int runs = 0;
  for (const Variant& f : variants) {
    for (int age : {2, std::numeric_limits<int>::max()}) {
      for (bool tr : {false, true}) {
        lshaped::LShapedConfig cfg;
        cfg.formulation = f.formulation;
        cfg.groups = f.groups;
        cfg.consolidation_age = age;
        cfg.trust_region.enabled = tr;
        const lshaped::LShapedResult r = lshaped::solve(fp, cfg);
        const std::string name = std::string(f.name) + (f.groups > 1 ? " K=" + std::to_string(f.groups) : "") +
                                 ", age " + (age == 2 ? "2" : "never") + ", TR " + (tr ? "on" : "off");
        v.expect(r.converged, name + " did not converge");
        v.expect(rel_gap(r.objective, de.objective) <= tol::kFormulation,
                 name + ": " + num(r.objective) + " vs " + num(de.objective));
        ++runs;
      }
    }
  }
  const double elapsed = seconds_since(start);
  v.expect(elapsed < tol::kFormulationSeconds, "runtime " + num(elapsed) + " s");
  v.note(std::to_string(runs) + " runs");
  v.note("optimum " + num(de.objective));
  v.note(num(elapsed) + " s");
}

TEST_CASE("criterion 3: SAA intervals cover the exact value and narrow with N") {
  Verdict v(3, "VRP interval coverage on a 3-atom problem and width shrinkage from N=50 to N=500");
  const auto start = std::chrono::steady_clock::now();
  saa::SaaProblem p = support::atom_problem();
  lshaped::LShapedConfig single;
  single.formulation = lshaped::Formulation::kSingleCut;
  p.solver = saa::lshaped_solver(single);
  const double exact = support::exact_atom_value(support::kAtoms, support::kAtomCost);
  v.expect(std::abs(exact - support::kAtomVrp) <= 1e-12, "exact value " + num(exact));

  int covered = 0;
  for (int rep = 0; rep < tol::kCoverageReps; ++rep) {
    const saa::ConfidenceReport r = saa::vrp_interval(p, 50, 10, 10, 0.05, 90000 + rep);
    if (r.lo <= exact && exact <= r.hi) ++covered;
  }
  v.expect(covered >= tol::kCoverageRequired, "coverage " + std::to_string(covered) + "/100");

  double small = 0.0, large = 0.0;
  for (int rep = 0; rep < tol::kWidthReps; ++rep) {
    small += saa::vrp_interval(p, 50, 10, 10, 0.05, 91000 + rep).width() / tol::kWidthReps;
    large += saa::vrp_interval(p, 500, 10, 10, 0.05, 92000 + rep).width() / tol::kWidthReps;
  }
  v.expect(large < small, "mean width N=500 " + num(large) + " vs N=50 " + num(small));
  const double elapsed = seconds_since(start);
  v.expect(elapsed < tol::kSaaSeconds, "runtime " + num(elapsed) + " s");
  v.note("coverage " + std::to_string(covered) + "/100");
  v.note("mean width " + num(small) + " -> " + num(large));
  v.note(num(elapsed) + " s");
}

TEST_CASE("criterion 4: VSS is non-negative and its significance flag is interval disjointness") {
  Verdict v(4, "VRP >= EEV on finite instances; VSS endpoints; disjointness flag");
  std::mt19937_64 rng(4444);
  auto check_vss = [&](const std::string& name, const sp::FiniteProgram& fp) {
    const sp::DeterministicSolution de = sp::solve_deterministic_equivalent(fp);
    const std::vector<double> x_bar = sp::solve_expected_value_problem(fp);
    const double eev = sp::evaluate_decision(fp, x_bar).value;
    const double vss = fp.program->maximize() ? de.objective - eev : eev - de.objective;
    v.expect(de.optimal(), name + " did not solve");
    v.expect(vss >= -tol::kVss * std::max(1.0, std::abs(de.objective)),
             name + ": VRP " + num(de.objective) + " EEV " + num(eev));
  };
  int finite = 0;
  for (int k = 0; k < 8; ++k, ++finite) {
    Instance d = random_day_ahead(rng, 50 + k);
    check_vss(d.name, d.fp);
  }
  for (int k = 0; k < 8; ++k, ++finite) {
    Instance c = random_capacity(rng, 50 + k);
    check_vss(c.name, c.fp);
  }
  for (int k = 0; k < 4; ++k, ++finite) {
    MaintenanceInstance m = random_maintenance(rng, 50 + k);
    check_vss(m.instance.name, m.instance.fp);
  }
  for (int k = 0; k < 20; ++k, ++finite) {
    support::RandomShape shape;
    shape.sense = k % 2 ? sp::Sense::kMaximize : sp::Sense::kMinimize;
    shape.binaries = k % 3 == 0 ? 1 : 0;
    check_vss("random program #" + std::to_string(k), support::random_program(rng, shape));
  }

  std::uniform_real_distribution<double> u(-100.0, 100.0), w(0.0, 30.0);
  int disjoint = 0;
  for (int k = 0; k < 1000; ++k) {
    saa::ConfidenceReport vrp{saa::EstimatorKind::kVrp}, eev{saa::EstimatorKind::kEev};
    vrp.lo = u(rng);
    vrp.hi = vrp.lo + w(rng);
    vrp.estimate = 0.5 * (vrp.lo + vrp.hi);
    eev.lo = u(rng);
    eev.hi = eev.lo + w(rng);
    eev.estimate = 0.5 * (eev.lo + eev.hi);
    for (sp::Sense sense : {sp::Sense::kMaximize, sp::Sense::kMinimize}) {
      const saa::ConfidenceReport r = saa::vss_interval(vrp, eev, sense);
      const bool max = sense == sp::Sense::kMaximize;
      v.expect(r.lo == (max ? vrp.lo - eev.hi : eev.lo - vrp.hi), "VSS lower endpoint");
      v.expect(r.hi == (max ? vrp.hi - eev.lo : eev.hi - vrp.lo), "VSS upper endpoint");
      v.expect(r.estimate == (max ? vrp.estimate - eev.estimate : eev.estimate - vrp.estimate), "VSS estimate");
      const bool apart = vrp.hi < eev.lo || eev.hi < vrp.lo;
      v.expect(r.significant == apart, "flag for [" + num(vrp.lo) + ", " + num(vrp.hi) + "] vs [" + num(eev.lo) +
                                           ", " + num(eev.hi) + "]");
      disjoint += apart;
    }
  }
  // Shared endpoints overlap.
  saa::ConfidenceReport a{saa::EstimatorKind::kVrp, 1.0, 2.0, 1.5}, b{saa::EstimatorKind::kEev, 2.0, 3.0, 2.5};
  v.expect(!saa::vss_interval(a, b, sp::Sense::kMaximize).significant, "touching intervals flagged");
  v.note(std::to_string(finite) + " finite instances");
  v.note(std::to_string(disjoint) + "/2000 random pairs disjoint");
}

TEST_CASE("criterion 5: physical invariants hold on every solution") {
  Verdict v(5, "mass balance, production identity, load balance, maintenance exclusion, bid rules");
  const hydro::RiverNetwork skelleftealven = hydro::load_river_file(support::data_file("skelleftealven.csv"));
  v.expect(skelleftealven.size() == 15, "15 plants");
  for (const hydro::PlantData& p : skelleftealven.plants()) {
    const hydro::Segments s = hydro::production_segments(p);
    const double full = s.mu1 * s.qbar1 + s.mu2 * s.qbar2;
    v.expect(std::abs(full - p.capacity_mw) <= tol::kProductionIdentity * p.capacity_mw,
             p.name + ": " + num(full) + " vs " + num(p.capacity_mw));
  }

  sp::EvaluateOptions keep;
  keep.keep_solutions = true;
  int strategies = 0;
  auto day_ahead = [&](const std::string& name, const hydro::NetworkView& view, int hours, int n, std::uint64_t seed) {
    const DayAheadSpec spec = fixtures::day_ahead_spec(view, hours, seed);
    const auto samples = fixtures::day_samples(view.network, n, seed + 1, hours);
    const sp::FiniteProgram fp = sp::FiniteProgram::uniform(build_day_ahead(spec), samples);
    const lshaped::LShapedResult ls = lshaped::solve(fp);
    v.expect(ls.converged, name + " did not converge");
    const BidLayout L{hours, spec.levels.count(), static_cast<int>(spec.blocks.size())};
    const std::vector<double> x = emitted(L, ls.x, spec.levels, spec.blocks, total_capacity(view));
    v.expect(fixtures::bid_violation(L, x, spec.blocks, total_capacity(view)) <= tol::kBidCap,
             name + ": bid rule violated");
    ++strategies;
    const sp::Evaluation ev = sp::evaluate_decision(fp, x, keep);
    const DayAheadRecourse r = day_ahead_recourse_layout(spec);
    const auto m0 = fixtures::initial_volumes(view);
    for (int s = 0; s < fp.size(); ++s) {
      const auto& y = ev.solutions[s].primal;
      const double mass = fixtures::mass_balance_residual(view, samples[s], r.network, y, m0);
      const double load = fixtures::load_residual(r, spec.blocks, y);
      v.expect(mass <= tol::kMassBalance, name + ": mass balance residual " + num(mass));
      v.expect(load <= tol::kLoadBalance, name + ": load balance residual " + num(load));
    }
  };
  day_ahead("Skelleftealven day-ahead", hydro::rescale(skelleftealven, {1}), 24, 3, 15);
  std::mt19937_64 rng(555);
  for (int k = 0; k < 6; ++k) {
    const hydro::NetworkView view = hydro::rescale(fixtures::random_river(rng, 1 + k % 3), {1});
    day_ahead("random day-ahead #" + std::to_string(k), view, 24, 4, 600 + k);
  }

  for (int k = 0; k < 6; ++k) {
    const hydro::NetworkView view = hydro::rescale(fixtures::random_river(rng, 1 + k % 3), {1});
    std::vector<int> durations;
    for (int h = 0; h < view.size(); ++h) durations.push_back(1 + k % 3);
    const int hours = 8;
    const MaintenanceSpec spec = fixtures::maintenance_spec(view, hours, 700 + k, durations);
    const auto samples = fixtures::day_samples(view.network, 3, 710 + k, hours);
    const sp::FiniteProgram fp = sp::FiniteProgram::uniform(build_maintenance(spec), samples);
    const MaintenanceLayout L = maintenance_layout(spec);
    const lshaped::LShapedResult ls = lshaped::solve(fp);
    const std::string name = "maintenance #" + std::to_string(k);
    v.expect(ls.converged, name + " did not converge");
    const std::vector<double> x = emitted(L.bids, ls.x, spec.levels, {}, total_capacity(view));
    v.expect(fixtures::schedule_valid(L, x, durations), name + ": schedule");
    v.expect(fixtures::bid_violation(L.bids, x, {}, total_capacity(view)) <= tol::kBidCap, name + ": bid rule");
    ++strategies;
    NetworkColumns net;
    net.plants = view.size();
    net.periods = hours;
    net.q0 = 3 * hours;
    net.s0 = net.q0 + 2 * net.plants * hours;
    net.m0 = net.s0 + net.plants * hours;
    net.p0 = net.m0 + net.plants * hours;
    const sp::Evaluation ev = sp::evaluate_decision(fp, x, keep);
    for (int s = 0; s < fp.size(); ++s) {
      const auto& y = ev.solutions[s].primal;
      const double mass = fixtures::mass_balance_residual(view, samples[s], net, y, fixtures::initial_volumes(view));
      v.expect(mass <= tol::kMassBalance, name + ": mass balance residual " + num(mass));
      for (int t = 0; t < hours; ++t) {
        const double load = std::abs(y[t] - y[net.P(t)] - y[hours + t] + y[2 * hours + t]);
        v.expect(load <= tol::kLoadBalance, name + ": load balance residual " + num(load));
        for (int h = 0; h < net.plants; ++h) {
          if (x[L.s(h, t)] != 1.0) continue;
          v.expect(y[net.Q(h, 0, t)] == 0.0 && y[net.Q(h, 1, t)] == 0.0,
                   name + ": discharge " + num(y[net.Q(h, 0, t)] + y[net.Q(h, 1, t)]) + " during maintenance");
        }
      }
    }
  }
  v.note(std::to_string(strategies) + " strategies");
}

TEST_CASE("criterion 6: dispatch rules") {
  Verdict v(6, "hourly dispatch at rho=28 and block dispatch against enumeration");
  const std::vector<double> levels{26.3946, 29.1451};
  const std::vector<double> volumes{636.706, 680.039};
  const double traded = hourly_dispatch(28.0, levels, 0.0, volumes);
  v.expect(std::abs(traded - 661.998) <= tol::kFigureDispatch, "hourly dispatch " + num(traded));
  v.note("traded " + num(traded) + " MWh");

  std::mt19937_64 rng(66);
  std::uniform_real_distribution<double> price(0.0, 60.0), vol(0.0, 20.0);
  std::uniform_int_distribution<int> count(1, 6), hour(0, 23);
  for (int trial = 0; trial < tol::kBlockCases; ++trial) {
    std::vector<double> prices(24);
    for (double& p : prices) p = price(rng);
    std::vector<scenarios::Block> blocks;
    std::vector<std::vector<double>> lv, vl;
    const int B = count(rng);
    for (int b = 0; b < B; ++b) {
      int first = hour(rng), last = hour(rng);
      if (first > last) std::swap(first, last);
      blocks.push_back({first, last});
      const int I = count(rng);
      lv.emplace_back();
      vl.emplace_back();
      for (int i = 0; i < I; ++i) {
        lv.back().push_back(price(rng));
        vl.back().push_back(vol(rng));
      }
      std::sort(lv.back().begin(), lv.back().end());
    }
    const std::vector<double> got = block_dispatch(prices, blocks, lv, vl);
    for (int b = 0; b < B; ++b) {
      double mean = 0.0;
      for (int t = blocks[b].first; t <= blocks[b].last; ++t) mean += prices[t];
      mean /= blocks[b].last - blocks[b].first + 1;
      const int I = static_cast<int>(lv[b].size());
      double oracle = 0.0;
      for (int mask = 0; mask < 1 << I; ++mask) {
        bool consistent = true;
        double sum = 0.0;
        for (int i = 0; i < I; ++i) {
          const bool in = mask >> i & 1;
          consistent = consistent && in == (lv[b][i] <= mean);
          if (in) sum += vl[b][i];
        }
        if (consistent) oracle = sum;
      }
      v.expect(std::abs(got[b] - oracle) <= tol::kBlockDispatch * std::max(1.0, oracle),
               "case " + std::to_string(trial) + " block " + std::to_string(b) + ": " + num(got[b]) + " vs " +
                   num(oracle));
    }
  }
}

TEST_CASE("criterion 7: capacity economics") {
  Verdict v(7, "equivalent cost, present value, cap monotonicity, prohibitive cost");
  const double cost = equivalent_cost(365);
  v.expect(std::abs(cost - tol::kEquivalentCost365) <= tol::kEquivalentCostTol,
           "equivalent_cost(365) = " + num(cost) + ", expected " + num(tol::kEquivalentCost365) + " +- " +
               num(tol::kEquivalentCostTol));
  v.note("equivalent_cost(365) = " + num(cost));

  const CostParams params;
  for (double days : {365.0, 73.0, 146.0, 10.0, 5.0}) {
    const double payment = equivalent_cost(days, params);
    const int n = static_cast<int>(std::lround(params.payback_years * 365.0 / days));
    double pv = 0.0;
    for (int k = 1; k <= n; ++k) pv += payment / std::pow(1.0 + params.rate, k * days / 365.0);
    v.expect(std::abs(pv - params.unit_cost) <= tol::kPresentValueTol,
             "present value for " + num(days) + " days: " + num(pv));
  }

  const hydro::NetworkView view = fixtures::toy_view(3, 24);
  const auto samples = scenarios::ScenarioSampler({}, view.network).draw_capacity_horizon(6, 77, 14, {24});
  CapacitySpec cheap{view, 14, {}};
  cheap.cost.unit_cost = 0.0005;
  double previous = -lp::kInfinity;
  std::string profile;
  for (double cap : {0.0, 100.0, 1000.0}) {
    cheap.expansion_cap_mw = cap;
    const lshaped::LShapedResult r = lshaped::solve(sp::FiniteProgram::uniform(build_capacity(cheap), samples));
    v.expect(r.converged, "cap " + num(cap) + " did not converge");
    v.expect(r.objective >= previous - 1e-9 * std::abs(r.objective),
             "VRP at cap " + num(cap) + " = " + num(r.objective) + " < " + num(previous));
    previous = r.objective;
    profile += (profile.empty() ? "" : " <= ") + num(r.objective);
  }
  v.note("VRP by cap " + profile);

  CapacitySpec frozen{view, 14, {}};
  frozen.cost.unit_cost = std::numeric_limits<double>::infinity();
  const lshaped::LShapedResult none = lshaped::solve(sp::FiniteProgram::uniform(build_capacity(frozen), samples));
  v.expect(none.converged, "infinite cost did not converge");
  for (double d : none.x) v.expect(d == 0.0, "expansion " + num(d) + " at infinite cost");
}

TEST_CASE("criterion 8: water value cuts") {
  Verdict v(8, "cut envelope bounds the week-ahead value; single-reservoir slope");
  const hydro::NetworkView view = fixtures::toy_view(3, 24);
  const auto samples = scenarios::ScenarioSampler({}, view.network).draw_horizon(5, 8, 7, {24});
  const std::vector<double> grid{0.0, 0.25, 0.5, 0.75, 1.0};
  const WaterValueResult wv = compute_water_value(view, samples, grid, {});
  v.expect(wv.run.converged, "training did not converge");
  const sp::FiniteProgram fp = sp::FiniteProgram::uniform(build_week_ahead(view, 7), samples);
  std::mt19937_64 rng(88);
  std::uniform_real_distribution<double> fill(0.0, 1.0);
  double worst = lp::kInfinity;
  for (int k = 0; k < tol::kEnvelopePoints; ++k) {
    std::vector<double> x(view.size()), he(view.size());
    for (int h = 0; h < view.size(); ++h) {
      x[h] = fill(rng) * view.plants[h].max_volume;
      he[h] = x[h] * view.resolution.hours_per_period;
    }
    const double direct = sp::evaluate_decision(fp, x).value;
    const double envelope = wv.value.evaluate(he);
    worst = std::min(worst, envelope - direct);
    v.expect(envelope >= direct - tol::kEnvelope, "point " + std::to_string(k) + ": envelope " + num(envelope) +
                                                      " below direct " + num(direct));
  }
  v.note("min envelope - direct " + num(worst));

  hydro::RiverNetwork solo({support::plant(1, "Solo", 40, 10, 100)}, {-1});
  const hydro::NetworkView single = hydro::rescale(solo, {1});
  const double price = 25.0;
  const sp::ScenarioSample flat{std::vector<double>(24, price), {std::vector<double>(24, 0.0)}};
  const WaterValueResult one = compute_water_value(single, {flat}, std::vector<double>{0.25, 0.5, 0.75}, {});
  const double closed = single.plants[0].segments.mu1 * price;
  // Volumes below 0.75 Qbar T empty through the first segment alone.
  for (double m : {10.0, 37.5, 60.0, 90.0}) {
    double best = lp::kInfinity, slope = 0.0;
    for (const WaterValueCut& c : one.value.cuts) {
      const double value = c.intercept + c.slope[0] * m;
      if (value < best) best = value, slope = c.slope[0];
    }
    v.expect(std::abs(slope - closed) <= tol::kSlope, "slope at " + num(m) + " HE: " + num(slope) + " vs " + num(closed));
  }
  v.note("slope " + num(closed) + " Eur/HE");
}

TEST_CASE("criterion 9: CLI reruns are byte-identical") {
  Verdict v(9, "every command rerun with the same seed and configuration");
  const fs::path dir = fs::temp_directory_path() / "hydrosp_acceptance_cli";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path config = dir / "config.json";
  {
    std::ofstream out(config);
    out << "{\n"
        << "  \"river\": \"" << support::data_file("toy_chain3.csv") << "\",\n"
        << "  \"scenarios\": 4,\n"
        << "  \"seed\": 31,\n"
        << "  \"day_ahead\": {\"level_samples\": 20},\n"
        << "  \"water_value\": {\"scenarios\": 3, \"horizon_days\": 2},\n"
        << "  \"saa\": {\"schedule\": [4, 8], \"M\": 3, \"T\": 3, \"eev_scenarios\": 20, \"ev_scenarios\": 20}\n"
        << "}\n";
  }
  const std::string cli = HYDROSP_CLI;
  auto invoke = [&](const std::string& args, const fs::path& output) {
    const std::string command =
        "\"" + cli + "\" " + args + " --config \"" + config.string() + "\" --output \"" + output.string() + "\" > \"" +
        (dir / "stdout.txt").string() + "\" 2>&1";
    return std::system(command.c_str());
  };
  const fs::path strategy = dir / "day-ahead_a" / "strategy.csv";
  const fs::path maintenance = dir / "maintenance_a";
  const std::vector<std::pair<std::string, std::string>> commands{
      {"day-ahead", "solve --model day-ahead"},
      {"maintenance", "solve --model maintenance --day_ahead.hours 8"},
      {"capacity", "solve --model capacity --horizon-days 28 --resolution 24"},
      {"saa", "saa --model day-ahead"},
      {"evaluate", "evaluate --model day-ahead --strategy \"" + strategy.string() + "\""},
      {"evaluate-maintenance", "evaluate --model maintenance --day_ahead.hours 8 --strategy \"" +
                                   (maintenance / "strategy.csv").string() + "\" --schedule \"" +
                                   (maintenance / "schedule.csv").string() + "\""},
      {"water-value", "water-value"},
  };
  int files = 0;
  for (const auto& [name, args] : commands) {
    const fs::path a = dir / (name + "_a"), b = dir / (name + "_b");
    const int ra = invoke(args, a), rb = invoke(args, b);
    v.expect(ra == 0 && rb == 0, name + " exited with " + std::to_string(ra) + "/" + std::to_string(rb) + ": " +
                                     slurp(dir / "stdout.txt"));
    if (ra != 0 || rb != 0) continue;
    int here = 0;
    for (const auto& entry : fs::directory_iterator(a)) {
      const fs::path other = b / entry.path().filename();
      v.expect(fs::exists(other) && slurp(entry.path()) == slurp(other),
               name + ": " + entry.path().filename().string() + " differs");
      ++here;
    }
    v.expect(here == std::distance(fs::directory_iterator(b), fs::directory_iterator{}), name + ": file sets differ");
    v.expect(here > 0, name + ": no artifacts");
    files += here;
  }
  v.note(std::to_string(commands.size()) + " commands");
  v.note(std::to_string(files) + " artifacts compared");
}

#include "hydrosp/cli/commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "hydrosp/errors.hpp"
#include "hydrosp/hydro/resolution.hpp"
#include "hydrosp/models/model_io.hpp"
#include "hydrosp/scenarios/sampler.hpp"
#include "hydrosp/sp/deterministic_equivalent.hpp"
#include "hydrosp/util/csv.hpp"
#include "hydrosp/util/seed.hpp"

namespace hydrosp::cli {

using nlohmann::ordered_json;

namespace {

std::ofstream open_artifact(const ExperimentConfig& config, const std::string& name) {
  std::filesystem::create_directories(config.output);
  const std::string path = (std::filesystem::path(config.output) / name).string();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  return out;
}

std::ifstream open_input(const std::string& path, const std::string& what) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + what + " '" + path + "'");
  return in;
}

void write_json(const ExperimentConfig& config, const std::string& name, const ordered_json& j) {
  open_artifact(config, name) << j.dump(2) << '\n';
}

ordered_json header(const char* command, const ExperimentConfig& config) {
  ordered_json j;
  j["command"] = command;
  j["model"] = to_string(config.model);
  j["scenarios"] = config.scenarios;
  j["seed"] = config.seed;
  return j;
}

std::vector<sp::ScenarioSample> training_scenarios(const Experiment& e) {
  return e.sampler(e.config.scenarios, util::child_seed(e.config.seed, saa::kCandidateStream, 0));
}

int periods_of(const Experiment& e) {
  if (e.capacity) return models::capacity_periods(*e.capacity);
  return e.config.day_ahead.hours;
}

models::BidLayout bid_layout(const Experiment& e) {
  if (e.day_ahead) return {e.day_ahead->levels.hours(), e.day_ahead->levels.count(),
                           static_cast<int>(e.day_ahead->blocks.size())};
  return models::maintenance_layout(*e.maintenance).bids;
}

void write_decision(const Experiment& e, std::span<const double> x) {
  if (e.capacity) {
    auto out = open_artifact(e.config, "expansion.csv");
    models::write_expansion(out, e.capacity->network, x);
    return;
  }
  const std::vector<scenarios::Block> no_blocks;
  const auto& levels = e.day_ahead ? e.day_ahead->levels : e.maintenance->levels;
  const auto& blocks = e.day_ahead ? e.day_ahead->blocks : no_blocks;
  {
    auto out = open_artifact(e.config, "strategy.csv");
    const auto& network = e.day_ahead ? e.day_ahead->network : e.maintenance->network;
    const models::BidLayout L = bid_layout(e);
    const std::vector<double> clean = models::clean_bids(L, x, blocks, models::total_capacity(network));
    models::write_strategy(out, models::extract_strategy(L, clean, levels, blocks));
  }
  if (e.maintenance) {
    auto out = open_artifact(e.config, "schedule.csv");
    models::write_schedule(out, models::maintenance_layout(*e.maintenance), x, e.river.names());
  }
}

}  // namespace

hydro::RiverNetwork load_network(const ExperimentConfig& config) {
  hydro::RiverNetwork river = hydro::load_river_file(config.river);
  if (config.plants > 0) {
    if (config.plants > river.size()) {
      throw ConfigError("river file '" + config.river + "' has only " + std::to_string(river.size()) + " plants");
    }
    river = river.prefix(config.plants);
  }
  return river;
}

models::WaterValueResult train_water_value(const ExperimentConfig& config, const hydro::RiverNetwork& river) {
  const WaterValueSettings& w = config.water_value;
  const hydro::NetworkView view = hydro::rescale(river, hydro::Resolution{w.resolution});
  const scenarios::ScenarioSampler sampler(config.sampler, river);
  std::vector<sp::ScenarioSample> samples = sampler.draw_horizon(
      w.scenarios, util::child_seed(config.seed, kWaterValueStream, 0), w.horizon_days, view.resolution);
  return models::compute_water_value(view, std::move(samples), w.grid, config.solver);
}

Experiment build_experiment(const ExperimentConfig& config, const std::optional<scenarios::PriceLevels>& levels) {
  Experiment e;
  e.config = config;
  e.river = load_network(config);
  const scenarios::ScenarioSampler sampler(config.sampler, e.river);

  auto price_levels = [&]() {
    if (levels) {
      if (levels->hours() != config.day_ahead.hours || levels->count() != config.day_ahead.levels) {
        throw ConfigError("strategy covers " + std::to_string(levels->hours()) + " hours and " +
                          std::to_string(levels->count()) + " levels; model expects " +
                          std::to_string(config.day_ahead.hours) + " and " + std::to_string(config.day_ahead.levels));
      }
      return *levels;
    }
    const auto draws = sampler.draw_day_ahead(config.day_ahead.level_samples,
                                              util::child_seed(config.seed, kLevelStream, 0), config.day_ahead.hours);
    return scenarios::price_levels(draws, config.day_ahead.levels);
  };

  switch (config.model) {
    case ModelKind::kDayAhead: {
      models::DayAheadSpec spec;
      spec.network = hydro::rescale(e.river, hydro::Resolution{1});
      spec.levels = price_levels();
      spec.blocks = config.day_ahead.blocks;
      spec.penalties = config.day_ahead.penalties;
      spec.ignore_water_value = config.day_ahead.ignore_water_value;
      if (!spec.ignore_water_value) {
        if (!config.day_ahead.water_value_cuts.empty()) {
          auto in = open_input(config.day_ahead.water_value_cuts, "water-value cut file");
          spec.water_value = models::read_cuts(in);
          if (spec.water_value.plants != e.river.names()) {
            throw ConfigError("cut file '" + config.day_ahead.water_value_cuts + "' does not match the river plants");
          }
        } else {
          spec.water_value = train_water_value(config, e.river).value;
        }
      }
      e.program = models::build_day_ahead(spec);
      e.day_ahead = std::move(spec);
      const int hours = config.day_ahead.hours;
      e.sampler = [sampler, hours](int n, std::uint64_t seed) { return sampler.draw_day_ahead(n, seed, hours); };
      break;
    }
    case ModelKind::kMaintenance: {
      models::MaintenanceSpec spec;
      spec.network = hydro::rescale(e.river, hydro::Resolution{1});
      spec.levels = price_levels();
      spec.penalties = config.day_ahead.penalties;
      spec.durations = config.maintenance_durations ? *config.maintenance_durations
                                                    : models::maintenance_durations(spec.network);
      e.program = models::build_maintenance(spec);
      e.maintenance = std::move(spec);
      const int hours = config.day_ahead.hours;
      e.sampler = [sampler, hours](int n, std::uint64_t seed) { return sampler.draw_day_ahead(n, seed, hours); };
      break;
    }
    case ModelKind::kCapacity: {
      models::CapacitySpec spec;
      spec.network = hydro::rescale(e.river, hydro::Resolution{config.resolution});
      spec.horizon_days = config.horizon_days;
      spec.cost = config.cost;
      spec.expansion_cap_mw = config.expansion_cap_mw;
      e.program = models::build_capacity(spec);
      const int days = config.horizon_days;
      const hydro::Resolution res = spec.network.resolution;
      e.capacity = std::move(spec);
      e.sampler = [sampler, days, res](int n, std::uint64_t seed) {
        return sampler.draw_capacity_horizon(n, seed, days, res);
      };
      break;
    }
  }
  return e;
}

void cmd_solve(const ExperimentConfig& config) {
  const Experiment e = build_experiment(config);
  const sp::FiniteProgram fp = sp::FiniteProgram::uniform(e.program, training_scenarios(e));
  const lshaped::LShapedResult r = lshaped::solve(fp, config.solver);
  {
    auto out = open_artifact(config, "iterations.csv");
    lshaped::write_iteration_log(out, r.log, config.timings);
  }
  write_decision(e, r.x);
  ordered_json j = header("solve", config);
  j["periods"] = periods_of(e);
  j["first_stage_size"] = e.program->first_stage_size();
  j["objective_eur"] = r.objective;
  j["bound_eur"] = r.bound;
  j["converged"] = r.converged;
  j["iterations"] = r.iterations;
  write_json(config, "objective.json", j);
  if (!r.converged) throw NotConverged("L-shaped stopped after " + std::to_string(r.iterations) + " iterations");
}

void cmd_saa(const ExperimentConfig& config) {
  const Experiment e = build_experiment(config);
  saa::SaaProblem problem{e.program, e.sampler, saa::lshaped_solver(config.solver), config.solver.threads};
  const saa::RefineResult refine =
      saa::saa_refine(problem, config.saa.alpha, config.saa.tolerance, config.saa.schedule, config.saa.M,
                      config.saa.T, config.seed);
  const sp::FiniteProgram ev_fp = sp::FiniteProgram::uniform(
      e.program, e.sampler(config.saa.ev_scenarios, util::child_seed(config.seed, saa::kExpectedValueStream, 0)));
  const std::vector<double> x_bar = sp::solve_expected_value_problem(ev_fp, config.solver.master);
  const saa::ConfidenceReport eev =
      saa::eev_interval(problem, x_bar, config.saa.eev_scenarios, config.saa.alpha, config.seed);
  const saa::ConfidenceReport vss = saa::vss_interval(refine.final_report, eev, e.program->sense());

  {
    auto out = open_artifact(config, "intervals.csv");
    out << "# values in Eur\n";
    out << "N,lo,hi,estimate,kind\n";
    auto row = [&](const saa::ConfidenceReport& r) {
      out << r.N << ',' << util::format_double(r.lo) << ',' << util::format_double(r.hi) << ','
          << util::format_double(r.estimate) << ',' << saa::to_string(r.kind) << '\n';
    };
    for (const auto& r : refine.history) row(r);
    row(eev);
    row(vss);
  }
  ordered_json j = header("saa", config);
  j["vrp"] = ordered_json::parse(saa::to_json(refine.final_report));
  j["eev"] = ordered_json::parse(saa::to_json(eev));
  j["vss"] = ordered_json::parse(saa::to_json(vss));
  j["vss_significant"] = vss.significant;
  write_json(config, "objective.json", j);
}

void cmd_evaluate(const ExperimentConfig& config, const EvaluateInputs& inputs) {
  if (inputs.strategy.empty()) throw ConfigError("evaluate needs --strategy");
  std::vector<double> x;
  std::optional<scenarios::PriceLevels> levels;
  Experiment e;
  if (config.model == ModelKind::kCapacity) {
    e = build_experiment(config);
    auto in = open_input(inputs.strategy, "expansion plan");
    x = models::read_expansion(in, e.capacity->network);
  } else {
    const int blocks = config.model == ModelKind::kDayAhead ? static_cast<int>(config.day_ahead.blocks.size()) : 0;
    const models::BidLayout layout{config.day_ahead.hours, config.day_ahead.levels, blocks};
    auto in = open_input(inputs.strategy, "strategy");
    models::StrategyFile file = models::read_strategy(in, layout);
    x = std::move(file.x);
    e = build_experiment(config, file.levels);
    if (e.maintenance) {
      if (inputs.schedule.empty()) throw ConfigError("maintenance evaluation needs --schedule");
      auto sin = open_input(inputs.schedule, "schedule");
      models::read_schedule(sin, models::maintenance_layout(*e.maintenance), e.river.names(), x);
    }
  }
  const std::vector<sp::ScenarioSample> scenarios =
      inputs.training ? training_scenarios(e)
                      : e.sampler(config.scenarios, util::child_seed(config.seed, saa::kEvaluationStream, 0));
  const sp::FiniteProgram fp = sp::FiniteProgram::uniform(e.program, scenarios);
  sp::EvaluateOptions opts;
  opts.threads = config.solver.threads;
  opts.keep_solutions = !e.capacity;
  sp::Evaluation ev;
  try {
    ev = sp::evaluate_decision(fp, x, opts);
  } catch (const std::invalid_argument& ex) {
    throw ConfigError(std::string("decision is not feasible for the model: ") + ex.what());
  }

  ordered_json j = header("evaluate", config);
  j["training_scenarios"] = inputs.training;
  j["expected_profit_eur"] = ev.value;
  j["first_stage_eur"] = ev.first_stage;
  if (!e.capacity) {
    const int T = config.day_ahead.hours;
    int plus0 = T, minus0 = 2 * T;
    if (e.day_ahead) {
      const models::DayAheadRecourse r = models::day_ahead_recourse_layout(*e.day_ahead);
      plus0 = r.plus0;
      minus0 = r.minus0;
    }
    double shortage = 0.0, surplus = 0.0;
    for (int s = 0; s < fp.size(); ++s) {
      const std::vector<double>& y = ev.solutions[s].primal;
      for (int t = 0; t < T; ++t) {
        shortage += fp.probabilities[s] * std::max(0.0, y[plus0 + t]);
        surplus += fp.probabilities[s] * std::max(0.0, y[minus0 + t]);
      }
    }
    j["mean_shortage_mwh"] = shortage;
    j["mean_surplus_mwh"] = surplus;
  }
  write_json(config, "objective.json", j);
}

void cmd_water_value(const ExperimentConfig& config) {
  const hydro::RiverNetwork river = load_network(config);
  const models::WaterValueResult r = train_water_value(config, river);
  {
    auto out = open_artifact(config, "cuts.csv");
    models::write_cuts(out, r.value);
  }
  {
    auto out = open_artifact(config, "iterations.csv");
    lshaped::write_iteration_log(out, r.run.log, config.timings);
  }
  ordered_json j;
  j["command"] = "water-value";
  j["scenarios"] = config.water_value.scenarios;
  j["seed"] = config.seed;
  j["horizon_days"] = config.water_value.horizon_days;
  j["objective_eur"] = r.run.objective;
  j["bound_eur"] = r.run.bound;
  j["converged"] = r.run.converged;
  j["iterations"] = r.run.iterations;
  j["cuts"] = r.value.cuts.size();
  write_json(config, "objective.json", j);
}

namespace {

struct Failure {
  int code;
  const char* kind;
  std::string message;
};

void report(std::ostream& err, const Failure& f) {
  ordered_json j;
  j["error"] = {{"kind", f.kind}, {"message", f.message}, {"exit_code", f.code}};
  err << j.dump() << '\n';
}

// Splits "--a.b value" and "--a.b=value" pairs left over by the option parser.
std::vector<std::pair<std::string, std::string>> overrides_from(const std::vector<std::string>& rest) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    const std::string& arg = rest[i];
    if (arg.rfind("--", 0) != 0 || arg.size() < 3) throw ConfigError("unexpected argument '" + arg + "'");
    const std::size_t eq = arg.find('=');
    if (eq != std::string::npos) {
      out.emplace_back(arg.substr(2, eq - 2), arg.substr(eq + 1));
    } else {
      if (i + 1 >= rest.size()) throw ConfigError("option '" + arg + "' needs a value");
      out.emplace_back(arg.substr(2), rest[++i]);
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-stage stochastic hydropower planning"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  struct Common {
    std::string config;
    std::optional<std::string> model, output;
    std::optional<int> scenarios, resolution, horizon_days;
    std::optional<std::uint64_t> seed;
    bool timings = false;
  } common;
  EvaluateInputs eval;

  auto add_common = [&](CLI::App* sub) {
    sub->allow_extras();
    sub->add_option("--config", common.config, "JSON configuration file");
    sub->add_option("--model", common.model, "day-ahead, maintenance or capacity");
    sub->add_option("--scenarios", common.scenarios, "scenarios per solved instance");
    sub->add_option("--seed", common.seed, "master seed");
    sub->add_option("--output", common.output, "artifact directory");
    sub->add_option("--resolution", common.resolution, "hours per period (capacity model)");
    sub->add_option("--horizon-days", common.horizon_days, "horizon in days (capacity model)");
    sub->add_flag("--timings", common.timings, "record wall times in iterations.csv");
    sub->footer("Any configuration key can be overridden as --dotted.key VALUE.");
  };
  CLI::App* solve = app.add_subcommand("solve", "solve one sampled instance by L-shaped");
  CLI::App* saa = app.add_subcommand("saa", "confidence intervals for VRP, EEV and VSS");
  CLI::App* evaluate = app.add_subcommand("evaluate", "expected profit of a stored decision");
  CLI::App* water = app.add_subcommand("water-value", "train water-value cuts on the week-ahead problem");
  CLI::App* defaults = app.add_subcommand("defaults", "print the default configuration");
  for (CLI::App* sub : {solve, saa, evaluate, water}) add_common(sub);
  evaluate->add_option("--strategy", eval.strategy, "strategy.csv, or expansion.csv for capacity")->required();
  evaluate->add_option("--schedule", eval.schedule, "schedule.csv for the maintenance model");
  evaluate->add_flag("--training", eval.training, "use the solve command's scenarios");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    report(err, {kConfigFailure, "usage", e.what()});
    return kConfigFailure;
  }

  if (defaults->parsed()) {
    out << default_config_json() << '\n';
    return kOk;
  }

  try {
    CLI::App* active = app.get_subcommands().front();
    auto overrides = overrides_from(active->remaining());
    auto set = [&](const char* key, const std::string& value) { overrides.emplace_back(key, value); };
    if (common.model) set("model", '"' + *common.model + '"');
    if (common.output) set("output", ordered_json(*common.output).dump());
    if (common.scenarios) set("scenarios", std::to_string(*common.scenarios));
    if (common.seed) set("seed", std::to_string(*common.seed));
    if (common.resolution) set("resolution", std::to_string(*common.resolution));
    if (common.horizon_days) set("horizon_days", std::to_string(*common.horizon_days));
    if (common.timings) set("timings", "true");
    const ExperimentConfig config = load_config(common.config, overrides);

    if (active == solve) cmd_solve(config);
    if (active == saa) cmd_saa(config);
    if (active == evaluate) cmd_evaluate(config, eval);
    if (active == water) cmd_water_value(config);
    out << (std::filesystem::path(config.output) / "objective.json").string() << '\n';
    return kOk;
  } catch (const NotConverged& e) {
    report(err, {kNotConverged, "not_converged", e.what()});
    return kNotConverged;
  } catch (const ConfigError& e) {
    report(err, {kConfigFailure, "config", e.what()});
    return kConfigFailure;
  } catch (const ParseError& e) {
    report(err, {kConfigFailure, "parse", e.what()});
    return kConfigFailure;
  } catch (const std::invalid_argument& e) {
    report(err, {kConfigFailure, "config", e.what()});
    return kConfigFailure;
  } catch (const InfeasibleScenarioError& e) {
    report(err, {kNumericalFailure, "infeasible_scenario", e.what()});
    return kNumericalFailure;
  } catch (const NumericalError& e) {
    report(err, {kNumericalFailure, "numerical", e.what()});
    return kNumericalFailure;
  } catch (const std::exception& e) {
    report(err, {kNumericalFailure, "internal", e.what()});
    return kNumericalFailure;
  }
}

}  // namespace hydrosp::cli

#include "hydrosp/cli/config.hpp"

#include <filesystem>
#include <fstream>
#include <limits>
#include <json.hpp>

#include "hydrosp/errors.hpp"

namespace hydrosp::cli {

using nlohmann::ordered_json;

namespace {

ordered_json defaults() {
  const ExperimentConfig c;
  const scenarios::SamplerConfig& s = c.sampler;
  const models::Penalties& p = c.day_ahead.penalties;
  ordered_json j;
  j["river"] = "";
  j["plants"] = c.plants;
  j["model"] = "day-ahead";
  j["scenarios"] = c.scenarios;
  j["seed"] = c.seed;
  j["output"] = c.output;
  j["horizon_days"] = c.horizon_days;
  j["resolution"] = c.resolution;
  j["timings"] = c.timings;
  j["sampler"] = {{"start_day_of_year", s.start_day_of_year},
                  {"price_base", s.price_base},
                  {"price_diurnal_amplitude", s.price_diurnal_amplitude},
                  {"price_seasonal_amplitude", s.price_seasonal_amplitude},
                  {"price_ar", s.price_ar},
                  {"price_noise", s.price_noise},
                  {"inflow_fraction", s.inflow_fraction},
                  {"inflow_seasonal_amplitude", s.inflow_seasonal_amplitude},
                  {"inflow_ar", s.inflow_ar},
                  {"inflow_noise", s.inflow_noise},
                  {"rate_cap", s.rate_cap},
                  {"fixed_price_rate", nullptr}};
  j["solver"] = {{"formulation", "multi-cut"},
                 {"groups", c.solver.groups},
                 {"consolidation_age", 0},
                 {"trust_region",
                  {{"enabled", c.solver.trust_region.enabled},
                   {"initial_radius", c.solver.trust_region.initial_radius},
                   {"max_radius", c.solver.trust_region.max_radius}}},
                 {"max_iterations", c.solver.max_iterations},
                 {"gap_tolerance", c.solver.gap_tolerance},
                 {"threads", c.solver.threads},
                 {"node_limit", c.solver.master.node_limit}};
  j["saa"] = {{"schedule", c.saa.schedule},       {"M", c.saa.M},
              {"T", c.saa.T},                     {"eev_scenarios", c.saa.eev_scenarios},
              {"ev_scenarios", c.saa.ev_scenarios}, {"alpha", c.saa.alpha},
              {"tolerance", c.saa.tolerance}};
  j["day_ahead"] = {{"hours", c.day_ahead.hours},
                    {"levels", c.day_ahead.levels},
                    {"level_samples", c.day_ahead.level_samples},
                    {"blocks", nullptr},
                    {"water_value_cuts", nullptr},
                    {"ignore_water_value", c.day_ahead.ignore_water_value},
                    {"penalties",
                     {{"peak_first", p.peak_first},
                      {"peak_end", p.peak_end},
                      {"beta_peak", p.beta_peak},
                      {"alpha_peak", p.alpha_peak},
                      {"beta_offpeak", p.beta_offpeak},
                      {"alpha_offpeak", p.alpha_offpeak}}}};
  j["maintenance"] = {{"durations", nullptr}};
  j["capacity"] = {{"expansion_cap_mw", c.expansion_cap_mw},
                   {"rate", c.cost.rate},
                   {"unit_cost", c.cost.unit_cost},
                   {"payback_years", c.cost.payback_years}};
  j["water_value"] = {{"scenarios", c.water_value.scenarios},
                      {"horizon_days", c.water_value.horizon_days},
                      {"resolution", c.water_value.resolution},
                      {"grid", c.water_value.grid}};
  return j;
}

// Values may replace null defaults freely; otherwise objects must keep to known keys.
void merge(ordered_json& base, const ordered_json& patch, const std::string& prefix) {
  if (!patch.is_object()) throw ConfigError("configuration section '" + prefix + "' must be an object");
  for (const auto& [key, value] : patch.items()) {
    const std::string path = prefix.empty() ? key : prefix + "." + key;
    if (!base.contains(key)) throw ConfigError("unknown configuration key '" + path + "'");
    ordered_json& slot = base[key];
    if (slot.is_object() && !value.is_null()) {
      merge(slot, value, path);
    } else {
      slot = value;
    }
  }
}

void set_path(ordered_json& root, const std::string& path, const std::string& text) {
  ordered_json* node = &root;
  std::size_t start = 0;
  while (true) {
    const std::size_t dot = path.find('.', start);
    const std::string key = path.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    if (!node->is_object() || !node->contains(key)) throw ConfigError("unknown configuration key '" + path + "'");
    node = &(*node)[key];
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  ordered_json value = ordered_json::parse(text, nullptr, false);
  if (value.is_discarded()) value = text;
  *node = std::move(value);
}

template <typename T>
T get(const ordered_json& j, const char* key, const std::string& section) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError("configuration key '" + section + key + "' has the wrong type");
  }
}

ModelKind parse_model(const std::string& name) {
  if (name == "day-ahead") return ModelKind::kDayAhead;
  if (name == "maintenance") return ModelKind::kMaintenance;
  if (name == "capacity") return ModelKind::kCapacity;
  throw ConfigError("unknown model '" + name + "' (day-ahead, maintenance, capacity)");
}

lshaped::Formulation parse_formulation(const std::string& name) {
  if (name == "multi-cut") return lshaped::Formulation::kMultiCut;
  if (name == "single-cut") return lshaped::Formulation::kSingleCut;
  if (name == "partial") return lshaped::Formulation::kPartial;
  throw ConfigError("unknown formulation '" + name + "' (multi-cut, single-cut, partial)");
}

std::string resolve(const std::filesystem::path& base, const std::string& path) {
  if (path.empty() || base.empty() || std::filesystem::path(path).is_absolute()) return path;
  return (base / path).lexically_normal().string();
}

ExperimentConfig from_json(const ordered_json& j) {
  ExperimentConfig c;
  c.river = get<std::string>(j, "river", "");
  c.plants = get<int>(j, "plants", "");
  c.model = parse_model(get<std::string>(j, "model", ""));
  c.scenarios = get<int>(j, "scenarios", "");
  c.seed = get<std::uint64_t>(j, "seed", "");
  c.output = get<std::string>(j, "output", "");
  c.horizon_days = get<int>(j, "horizon_days", "");
  c.resolution = get<int>(j, "resolution", "");
  c.timings = get<bool>(j, "timings", "");

  const ordered_json& s = j.at("sampler");
  const std::string ss = "sampler.";
  c.sampler.start_day_of_year = get<int>(s, "start_day_of_year", ss);
  c.sampler.price_base = get<double>(s, "price_base", ss);
  c.sampler.price_diurnal_amplitude = get<double>(s, "price_diurnal_amplitude", ss);
  c.sampler.price_seasonal_amplitude = get<double>(s, "price_seasonal_amplitude", ss);
  c.sampler.price_ar = get<double>(s, "price_ar", ss);
  c.sampler.price_noise = get<double>(s, "price_noise", ss);
  c.sampler.inflow_fraction = get<double>(s, "inflow_fraction", ss);
  c.sampler.inflow_seasonal_amplitude = get<double>(s, "inflow_seasonal_amplitude", ss);
  c.sampler.inflow_ar = get<double>(s, "inflow_ar", ss);
  c.sampler.inflow_noise = get<double>(s, "inflow_noise", ss);
  c.sampler.rate_cap = get<double>(s, "rate_cap", ss);
  if (!s.at("fixed_price_rate").is_null()) c.sampler.fixed_price_rate = get<double>(s, "fixed_price_rate", ss);
  c.sampler.seed = c.seed;

  const ordered_json& v = j.at("solver");
  const std::string vs = "solver.";
  c.solver.formulation = parse_formulation(get<std::string>(v, "formulation", vs));
  c.solver.groups = get<int>(v, "groups", vs);
  const ordered_json& age = v.at("consolidation_age");
  if (age.is_string() && age.get<std::string>() == "never") {
    c.solver.consolidation_age = lshaped::kNeverConsolidate;
  } else {
    c.solver.consolidation_age = get<int>(v, "consolidation_age", vs);
    if (c.solver.consolidation_age < 0) throw ConfigError("solver.consolidation_age must be >= 0 or \"never\"");
  }
  const ordered_json& tr = v.at("trust_region");
  c.solver.trust_region.enabled = get<bool>(tr, "enabled", vs + "trust_region.");
  c.solver.trust_region.initial_radius = get<double>(tr, "initial_radius", vs + "trust_region.");
  c.solver.trust_region.max_radius = get<double>(tr, "max_radius", vs + "trust_region.");
  c.solver.max_iterations = get<int>(v, "max_iterations", vs);
  c.solver.gap_tolerance = get<double>(v, "gap_tolerance", vs);
  c.solver.threads = get<int>(v, "threads", vs);
  c.solver.master.node_limit = get<long>(v, "node_limit", vs);

  const ordered_json& a = j.at("saa");
  const std::string as = "saa.";
  c.saa.schedule = get<std::vector<int>>(a, "schedule", as);
  c.saa.M = get<int>(a, "M", as);
  c.saa.T = get<int>(a, "T", as);
  c.saa.eev_scenarios = get<int>(a, "eev_scenarios", as);
  c.saa.ev_scenarios = get<int>(a, "ev_scenarios", as);
  c.saa.alpha = get<double>(a, "alpha", as);
  c.saa.tolerance = get<double>(a, "tolerance", as);

  const ordered_json& d = j.at("day_ahead");
  const std::string ds = "day_ahead.";
  c.day_ahead.hours = get<int>(d, "hours", ds);
  c.day_ahead.levels = get<int>(d, "levels", ds);
  c.day_ahead.level_samples = get<int>(d, "level_samples", ds);
  if (d.at("blocks").is_null()) {
    c.day_ahead.blocks = scenarios::default_blocks(c.day_ahead.hours);
  } else {
    c.day_ahead.blocks.clear();
    for (const auto& pair : get<std::vector<std::vector<int>>>(d, "blocks", ds)) {
      if (pair.size() != 2) throw ConfigError("day_ahead.blocks entries are [first, last] hour pairs");
      c.day_ahead.blocks.push_back({pair[0], pair[1]});
    }
  }
  if (!d.at("water_value_cuts").is_null()) c.day_ahead.water_value_cuts = get<std::string>(d, "water_value_cuts", ds);
  c.day_ahead.ignore_water_value = get<bool>(d, "ignore_water_value", ds);
  const ordered_json& p = d.at("penalties");
  const std::string ps = "day_ahead.penalties.";
  c.day_ahead.penalties.peak_first = get<int>(p, "peak_first", ps);
  c.day_ahead.penalties.peak_end = get<int>(p, "peak_end", ps);
  c.day_ahead.penalties.beta_peak = get<double>(p, "beta_peak", ps);
  c.day_ahead.penalties.alpha_peak = get<double>(p, "alpha_peak", ps);
  c.day_ahead.penalties.beta_offpeak = get<double>(p, "beta_offpeak", ps);
  c.day_ahead.penalties.alpha_offpeak = get<double>(p, "alpha_offpeak", ps);

  const ordered_json& m = j.at("maintenance");
  if (!m.at("durations").is_null()) c.maintenance_durations = get<std::vector<int>>(m, "durations", "maintenance.");

  const ordered_json& k = j.at("capacity");
  const std::string ks = "capacity.";
  c.expansion_cap_mw = get<double>(k, "expansion_cap_mw", ks);
  c.cost.rate = get<double>(k, "rate", ks);
  // JSON has no infinity; a null unit cost freezes the expansion.
  c.cost.unit_cost = k.at("unit_cost").is_null() ? std::numeric_limits<double>::infinity()
                                                 : get<double>(k, "unit_cost", ks);
  c.cost.payback_years = get<double>(k, "payback_years", ks);

  const ordered_json& w = j.at("water_value");
  const std::string ws = "water_value.";
  c.water_value.scenarios = get<int>(w, "scenarios", ws);
  c.water_value.horizon_days = get<int>(w, "horizon_days", ws);
  c.water_value.resolution = get<int>(w, "resolution", ws);
  c.water_value.grid = get<std::vector<double>>(w, "grid", ws);
  return c;
}

void validate(const ExperimentConfig& c) {
  if (c.river.empty()) throw ConfigError("no river file configured (key 'river')");
  if (c.plants < 0) throw ConfigError("plants must be >= 0");
  if (c.scenarios < 1) throw ConfigError("scenarios must be >= 1");
  if (c.resolution < 1 || c.horizon_days < 1) throw ConfigError("resolution and horizon_days must be >= 1");
  if (!(c.saa.alpha > 0.0 && c.saa.alpha < 0.5)) throw ConfigError("saa.alpha must lie in (0, 0.5)");
  if (c.saa.schedule.empty()) throw ConfigError("saa.schedule must not be empty");
  for (std::size_t i = 0; i < c.saa.schedule.size(); ++i) {
    if (c.saa.schedule[i] < 1 || (i > 0 && c.saa.schedule[i] <= c.saa.schedule[i - 1])) {
      throw ConfigError("saa.schedule must be positive and increasing");
    }
  }
  if (c.saa.M < 2 || c.saa.T < 2) throw ConfigError("saa.M and saa.T must be >= 2");
  if (c.saa.eev_scenarios < 2 || c.saa.ev_scenarios < 1) throw ConfigError("saa scenario counts too small");
  if (c.saa.tolerance < 0.0) throw ConfigError("saa.tolerance must be >= 0");
  if (c.solver.groups < 1) throw ConfigError("solver.groups must be >= 1");
  if (c.solver.max_iterations < 1 || c.solver.threads < 1) throw ConfigError("solver limits must be >= 1");
  if (!(c.solver.gap_tolerance >= 0.0)) throw ConfigError("solver.gap_tolerance must be >= 0");
  if (c.day_ahead.hours < 1 || c.day_ahead.levels < 1 || c.day_ahead.levels % 2 == 0) {
    throw ConfigError("day_ahead.levels must be odd and hours positive");
  }
  if (c.day_ahead.level_samples < 2) throw ConfigError("day_ahead.level_samples must be >= 2");
  for (const scenarios::Block& b : c.day_ahead.blocks) {
    if (b.first < 0 || b.last < b.first || b.last >= c.day_ahead.hours) {
      throw ConfigError("block [" + std::to_string(b.first) + ", " + std::to_string(b.last) + "] outside the day");
    }
  }
  c.day_ahead.penalties.validate();
  if (c.water_value.scenarios < 1 || c.water_value.horizon_days < 1 || c.water_value.resolution < 1) {
    throw ConfigError("water_value settings must be positive");
  }
  for (double g : c.water_value.grid) {
    if (!(g >= 0.0 && g <= 1.0)) throw ConfigError("water_value.grid points must lie in [0, 1]");
  }
  if (!(c.expansion_cap_mw >= 0.0)) throw ConfigError("capacity.expansion_cap_mw must be >= 0");
  c.sampler.validate();
}

}  // namespace

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::kDayAhead: return "day-ahead";
    case ModelKind::kMaintenance: return "maintenance";
    case ModelKind::kCapacity: return "capacity";
  }
  return "?";
}

std::string default_config_json() { return defaults().dump(2); }

ExperimentConfig load_config(const std::string& path,
                             const std::vector<std::pair<std::string, std::string>>& overrides) {
  ordered_json j = defaults();
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open configuration file '" + path + "'");
    ordered_json file = ordered_json::parse(in, nullptr, false);
    if (file.is_discarded()) throw ConfigError("configuration file '" + path + "' is not valid JSON");
    merge(j, file, "");
    const std::filesystem::path base = std::filesystem::path(path).parent_path();
    if (j["river"].is_string()) j["river"] = resolve(base, j["river"].get<std::string>());
    auto& cuts = j["day_ahead"]["water_value_cuts"];
    if (cuts.is_string()) cuts = resolve(base, cuts.get<std::string>());
  }
  for (const auto& [key, value] : overrides) set_path(j, key, value);
  ExperimentConfig c = from_json(j);
  validate(c);
  return c;
}

}  // namespace hydrosp::cli

#include "hydrosp/scenarios/sampler.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "hydrosp/errors.hpp"
#include "hydrosp/util/seed.hpp"

namespace hydrosp::scenarios {

namespace {

constexpr double kDaysPerYear = 365.0;

double diurnal_shape(int hour) {
  const double h = hour % 24;
  auto bump = [h](double centre, double width) { return std::exp(-((h - centre) / width) * ((h - centre) / width)); };
  return bump(8.0, 2.0) + 0.9 * bump(18.0, 2.5) - 0.6 * bump(3.0, 3.0);
}

// Stationary AR(1) in standard-normal units.
class ArProcess {
 public:
  ArProcess(double phi, std::mt19937_64& rng) : phi_(phi), rng_(rng), z_(normal_(rng)) {}
  double value() const { return z_; }
  void step() { z_ = phi_ * z_ + std::sqrt(1.0 - phi_ * phi_) * normal_(rng_); }

 private:
  double phi_;
  std::mt19937_64& rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  double z_;
};

// Mean-one log-normal factor for a standard-normal draw z.
double lognormal_factor(double sigma, double z) { return std::exp(sigma * z - 0.5 * sigma * sigma); }

}  // namespace

void SamplerConfig::validate() const {
  if (start_day_of_year < 1 || start_day_of_year > 365) throw ConfigError("start_day_of_year must lie in [1, 365]");
  if (!(price_ar >= 0.0 && price_ar < 1.0) || !(inflow_ar >= 0.0 && inflow_ar < 1.0)) {
    throw ConfigError("AR coefficients must lie in [0, 1)");
  }
  if (price_noise < 0.0 || inflow_noise < 0.0) throw ConfigError("noise scales must be non-negative");
  if (rate_cap < 0.0) throw ConfigError("rate_cap must be non-negative");
  if (inflow_fraction < 0.0) throw ConfigError("inflow_fraction must be non-negative");
  if (std::abs(price_seasonal_amplitude) >= 1.0 || std::abs(inflow_seasonal_amplitude) >= 1.0) {
    throw ConfigError("seasonal amplitudes must lie in (-1, 1)");
  }
}

ScenarioSampler::ScenarioSampler(SamplerConfig config, const hydro::RiverNetwork& network)
    : config_(std::move(config)) {
  config_.validate();
  for (const hydro::PlantData& p : network.plants()) mean_inflow_.push_back(config_.inflow_fraction * p.max_discharge);
}

double ScenarioSampler::mean_price(int hour_of_day, int day_of_year) const {
  const double season =
      1.0 + config_.price_seasonal_amplitude * std::cos(2.0 * std::numbers::pi * (day_of_year - 15) / kDaysPerYear);
  return config_.price_base * season + config_.price_diurnal_amplitude * diurnal_shape(hour_of_day);
}

double ScenarioSampler::mean_inflow(int plant, int day_of_year) const {
  const double season =
      1.0 + config_.inflow_seasonal_amplitude * std::cos(2.0 * std::numbers::pi * (day_of_year - 150) / kDaysPerYear);
  return mean_inflow_.at(plant) * season;
}

sp::ScenarioSample ScenarioSampler::sample_day_ahead(std::uint64_t seed, int hours) const {
  std::mt19937_64 rng(seed);
  const int day = config_.start_day_of_year;
  sp::ScenarioSample s;
  s.price.resize(hours);
  ArProcess noise(config_.price_ar, rng);
  for (int t = 0; t < hours; ++t) {
    if (t > 0) noise.step();
    s.price[t] = mean_price(t, day) * lognormal_factor(config_.price_noise, noise.value());
  }
  std::normal_distribution<double> normal(0.0, 1.0);
  s.inflow.resize(plants());
  for (int h = 0; h < plants(); ++h) {
    const double v = mean_inflow(h, day) * lognormal_factor(config_.inflow_noise, normal(rng));
    s.inflow[h].assign(hours, v);
  }
  return s;
}

sp::ScenarioSample ScenarioSampler::chained(std::uint64_t seed, int horizon_days, hydro::Resolution resolution,
                                            bool growth) const {
  if (horizon_days < 1) throw ConfigError("horizon must be at least one day");
  const int hours = horizon_days * 24;
  const int R = resolution.hours_per_period;
  if (R < 1 || hours % R != 0) {
    throw ConfigError("horizon of " + std::to_string(horizon_days) + " days is not a whole number of " +
                      std::to_string(R) + "-hour periods");
  }
  std::mt19937_64 rng(seed);
  double rate = 0.0;
  if (growth) {
    if (config_.fixed_price_rate) {
      rate = *config_.fixed_price_rate;
    } else {
      std::uniform_real_distribution<double> uniform(0.0, 1.0);
      rate = config_.rate_cap * uniform(rng);
    }
  }
  std::vector<double> hourly_price(hours);
  ArProcess noise(config_.price_ar, rng);
  for (int d = 0; d < horizon_days; ++d) {
    const int offset = config_.start_day_of_year - 1 + d;
    const int day = offset % 365 + 1;
    const double compound = std::pow(1.0 + rate, offset / 365);
    for (int t = 0; t < 24; ++t) {
      if (d > 0 || t > 0) noise.step();
      hourly_price[d * 24 + t] = compound * mean_price(t, day) * lognormal_factor(config_.price_noise, noise.value());
    }
  }
  std::vector<std::vector<double>> hourly_inflow(plants(), std::vector<double>(hours));
  for (int h = 0; h < plants(); ++h) {
    ArProcess weekly(config_.inflow_ar, rng);
    for (int d = 0; d < horizon_days; ++d) {
      if (d > 0 && d % 7 == 0) weekly.step();
      const int day = (config_.start_day_of_year - 1 + d) % 365 + 1;
      const double v = mean_inflow(h, day) * lognormal_factor(config_.inflow_noise, weekly.value());
      for (int t = 0; t < 24; ++t) hourly_inflow[h][d * 24 + t] = v;
    }
  }

  const int periods = hours / R;
  sp::ScenarioSample s;
  s.price.assign(periods, 0.0);
  s.inflow.assign(plants(), std::vector<double>(periods, 0.0));
  for (int p = 0; p < periods; ++p) {
    double sum = 0.0;
    for (int k = 0; k < R; ++k) sum += hourly_price[p * R + k];
    s.price[p] = sum / R;
    for (int h = 0; h < plants(); ++h) {
      double v = 0.0;
      for (int k = 0; k < R; ++k) v += hourly_inflow[h][p * R + k];
      s.inflow[h][p] = v / R;
    }
  }
  return s;
}

sp::ScenarioSample ScenarioSampler::sample_capacity_horizon(std::uint64_t seed, int horizon_days,
                                                            hydro::Resolution resolution) const {
  return chained(seed, horizon_days, resolution, true);
}

sp::ScenarioSample ScenarioSampler::sample_horizon(std::uint64_t seed, int horizon_days,
                                                   hydro::Resolution resolution) const {
  return chained(seed, horizon_days, resolution, false);
}

std::vector<sp::ScenarioSample> ScenarioSampler::draw_day_ahead(int count, std::uint64_t seed, int hours) const {
  std::vector<sp::ScenarioSample> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(sample_day_ahead(util::child_seed(seed, 0, i), hours));
  return out;
}

std::vector<sp::ScenarioSample> ScenarioSampler::draw_capacity_horizon(int count, std::uint64_t seed, int horizon_days,
                                                                       hydro::Resolution resolution) const {
  std::vector<sp::ScenarioSample> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    out.push_back(sample_capacity_horizon(util::child_seed(seed, 0, i), horizon_days, resolution));
  }
  return out;
}

std::vector<sp::ScenarioSample> ScenarioSampler::draw_horizon(int count, std::uint64_t seed, int horizon_days,
                                                              hydro::Resolution resolution) const {
  std::vector<sp::ScenarioSample> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(sample_horizon(util::child_seed(seed, 0, i), horizon_days, resolution));
  return out;
}

}  // namespace hydrosp::scenarios

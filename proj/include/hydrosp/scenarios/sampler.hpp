#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hydrosp/hydro/resolution.hpp"
#include "hydrosp/hydro/river.hpp"
#include "hydrosp/sp/scenario.hpp"

namespace hydrosp::scenarios {

struct SamplerConfig {
  std::uint64_t seed = 1;
  int start_day_of_year = 1;  // date anchor, 1..365

  // Price mean: base level times a yearly cosine (peak in mid-January) plus a
  // diurnal profile with morning and evening peaks.
  double price_base = 30.0;
  double price_diurnal_amplitude = 6.0;
  double price_seasonal_amplitude = 0.15;
  // Multiplicative log-normal AR(1) noise on the hourly price.
  double price_ar = 0.7;
  double price_noise = 0.1;

  // Local inflow mean as a fraction of each plant's maximum discharge, with
  // a yearly cosine peaking at the spring flood.
  double inflow_fraction = 0.1;
  double inflow_seasonal_amplitude = 0.6;
  double inflow_ar = 0.8;  // week-to-week on long horizons
  double inflow_noise = 0.2;

  // Yearly price growth drawn uniformly from [0, rate_cap] per scenario.
  double rate_cap = 0.04;
  std::optional<double> fixed_price_rate;

  // Throws ConfigError on out-of-range values.
  void validate() const;
};

class ScenarioSampler {
 public:
  ScenarioSampler(SamplerConfig config, const hydro::RiverNetwork& network);

  const SamplerConfig& config() const { return config_; }
  int plants() const { return static_cast<int>(mean_inflow_.size()); }

  // Noise-free hourly price for an hour of the day on a day of the year.
  double mean_price(int hour_of_day, int day_of_year) const;
  double mean_inflow(int plant, int day_of_year) const;

  // One day of hourly prices and a constant local inflow per plant.
  sp::ScenarioSample sample_day_ahead(std::uint64_t seed, int hours = 24) const;
  // Chained daily curves, yearly price growth, aggregated to periods by mean.
  // Throws ConfigError when horizon_days * 24 is not a multiple of the period.
  sp::ScenarioSample sample_capacity_horizon(std::uint64_t seed, int horizon_days, hydro::Resolution resolution) const;
  // Like the capacity horizon without price growth.
  sp::ScenarioSample sample_horizon(std::uint64_t seed, int horizon_days, hydro::Resolution resolution) const;

  // `count` draws on child seeds of `seed`.
  std::vector<sp::ScenarioSample> draw_day_ahead(int count, std::uint64_t seed, int hours = 24) const;
  std::vector<sp::ScenarioSample> draw_capacity_horizon(int count, std::uint64_t seed, int horizon_days,
                                                        hydro::Resolution resolution) const;
  std::vector<sp::ScenarioSample> draw_horizon(int count, std::uint64_t seed, int horizon_days,
                                               hydro::Resolution resolution) const;

 private:
  sp::ScenarioSample chained(std::uint64_t seed, int horizon_days, hydro::Resolution resolution, bool growth) const;

  SamplerConfig config_;
  std::vector<double> mean_inflow_;  // base per plant before seasonality
};

}  // namespace hydrosp::scenarios

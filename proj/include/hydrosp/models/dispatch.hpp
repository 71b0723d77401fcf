#pragma once

#include <span>
#include <vector>

#include "hydrosp/scenarios/price_levels.hpp"

namespace hydrosp::models {

// Weights on the price-dependent volumes for a market price: linear
// interpolation between the bracketing levels, with the price clamped to the
// level range. Levels must be non-decreasing (std::invalid_argument).
std::vector<double> dispatch_weights(double price, std::span<const double> levels);

// x_I + interpolated price-dependent volume.
double hourly_dispatch(double price, std::span<const double> levels, double independent,
                       std::span<const double> dependent);

// 1 for each level whose block price is at or below the block's mean price.
std::vector<double> block_acceptance(double mean_price, std::span<const double> block_levels);

// Volume accepted in one block: all-or-nothing per level.
double block_dispatch(double mean_price, std::span<const double> block_levels, std::span<const double> volumes);

double block_mean_price(std::span<const double> prices, const scenarios::Block& block);

// Accepted volume per block. volumes[b][i] is the offer at level i.
std::vector<double> block_dispatch(std::span<const double> prices, std::span<const scenarios::Block> blocks,
                                   const std::vector<std::vector<double>>& block_levels,
                                   const std::vector<std::vector<double>>& volumes);

}  // namespace hydrosp::models

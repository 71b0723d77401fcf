#pragma once

#include <span>
#include <vector>

#include "hydrosp/sp/scenario.hpp"

namespace hydrosp::scenarios {

// Contiguous hours [first, last], 0-based and inclusive.
struct Block {
  int first = 0;
  int last = 0;
  int size() const { return last - first + 1; }
  bool contains(int hour) const { return hour >= first && hour <= last; }
};

// Six 4-hour blocks covering a 24-hour day.
std::vector<Block> default_blocks(int hours = 24);

struct PriceLevels {
  std::vector<std::vector<double>> hourly;  // [hour][level], ascending
  bool degenerate = false;                  // some hour had zero spread

  int hours() const { return static_cast<int>(hourly.size()); }
  int count() const { return hourly.empty() ? 0 : static_cast<int>(hourly.front().size()); }
};

// Per hour: mean + k * s for k = -(count-1)/2 .. (count-1)/2, with s the
// sample standard deviation across the scenarios. Throws
// std::invalid_argument for fewer than two samples or an even count.
PriceLevels price_levels(std::span<const sp::ScenarioSample> samples, int count = 5);

// [block][level]: mean over the block's hours of each hourly level.
std::vector<std::vector<double>> block_price_levels(const PriceLevels& levels, std::span<const Block> blocks);

}  // namespace hydrosp::scenarios

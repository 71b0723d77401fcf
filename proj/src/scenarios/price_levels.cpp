#include "hydrosp/scenarios/price_levels.hpp"

#include <cmath>
#include <stdexcept>

namespace hydrosp::scenarios {

std::vector<Block> default_blocks(int hours) {
  std::vector<Block> blocks;
  for (int first = 0; first + 4 <= hours; first += 4) blocks.push_back({first, first + 3});
  return blocks;
}

PriceLevels price_levels(std::span<const sp::ScenarioSample> samples, int count) {
  if (samples.size() < 2) throw std::invalid_argument("price levels need at least two samples");
  if (count < 1 || count % 2 == 0) throw std::invalid_argument("price level count must be odd");
  const int hours = samples.front().periods();
  const double n = static_cast<double>(samples.size());
  PriceLevels out;
  out.hourly.resize(hours);
  for (int t = 0; t < hours; ++t) {
    double mean = 0.0;
    for (const auto& s : samples) mean += s.price.at(t);
    mean /= n;
    double ss = 0.0;
    for (const auto& s : samples) ss += (s.price[t] - mean) * (s.price[t] - mean);
    const double sd = std::sqrt(ss / (n - 1.0));
    if (sd == 0.0) out.degenerate = true;
    const int half = (count - 1) / 2;
    for (int k = -half; k <= half; ++k) out.hourly[t].push_back(mean + k * sd);
  }
  return out;
}

std::vector<std::vector<double>> block_price_levels(const PriceLevels& levels, std::span<const Block> blocks) {
  std::vector<std::vector<double>> out;
  for (const Block& b : blocks) {
    if (b.size() < 1 || b.first < 0 || b.last >= levels.hours()) throw std::invalid_argument("empty or out-of-range block");
    std::vector<double> level(levels.count(), 0.0);
    for (int t = b.first; t <= b.last; ++t) {
      for (int i = 0; i < levels.count(); ++i) level[i] += levels.hourly[t][i];
    }
    for (double& v : level) v /= b.size();
    out.push_back(std::move(level));
  }
  return out;
}

}  // namespace hydrosp::scenarios

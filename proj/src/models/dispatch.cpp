#include "hydrosp/models/dispatch.hpp"

#include <stdexcept>

namespace hydrosp::models {

std::vector<double> dispatch_weights(double price, std::span<const double> levels) {
  if (levels.empty()) throw std::invalid_argument("no price levels");
  for (std::size_t i = 1; i < levels.size(); ++i) {
    if (levels[i] < levels[i - 1]) throw std::invalid_argument("price levels are not sorted");
  }
  const std::size_t n = levels.size();
  std::vector<double> w(n, 0.0);
  // Highest level at or below the price; prices below the range clamp to the first.
  std::size_t i = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (levels[k] <= price) i = k;
  }
  if (price < levels.front()) {
    w.front() = 1.0;
    return w;
  }
  if (i + 1 == n) {
    w.back() = 1.0;
    return w;
  }
  const double upper = (price - levels[i]) / (levels[i + 1] - levels[i]);
  w[i + 1] = upper;
  w[i] = 1.0 - upper;
  return w;
}

double hourly_dispatch(double price, std::span<const double> levels, double independent,
                       std::span<const double> dependent) {
  if (dependent.size() != levels.size()) throw std::invalid_argument("one dependent volume per level required");
  const std::vector<double> w = dispatch_weights(price, levels);
  double y = independent;
  for (std::size_t i = 0; i < w.size(); ++i) y += w[i] * dependent[i];
  return y;
}

std::vector<double> block_acceptance(double mean_price, std::span<const double> block_levels) {
  std::vector<double> a(block_levels.size(), 0.0);
  for (std::size_t i = 0; i < block_levels.size(); ++i) a[i] = block_levels[i] <= mean_price ? 1.0 : 0.0;
  return a;
}

double block_dispatch(double mean_price, std::span<const double> block_levels, std::span<const double> volumes) {
  if (volumes.size() != block_levels.size()) throw std::invalid_argument("one block volume per level required");
  double y = 0.0;
  for (std::size_t i = 0; i < volumes.size(); ++i) {
    if (block_levels[i] <= mean_price) y += volumes[i];
  }
  return y;
}

double block_mean_price(std::span<const double> prices, const scenarios::Block& block) {
  double sum = 0.0;
  for (int t = block.first; t <= block.last; ++t) sum += prices[t];
  return sum / block.size();
}

std::vector<double> block_dispatch(std::span<const double> prices, std::span<const scenarios::Block> blocks,
                                   const std::vector<std::vector<double>>& block_levels,
                                   const std::vector<std::vector<double>>& volumes) {
  std::vector<double> out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    out.push_back(block_dispatch(block_mean_price(prices, blocks[b]), block_levels.at(b), volumes.at(b)));
  }
  return out;
}

}  // namespace hydrosp::models

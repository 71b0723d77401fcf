#include "hydrosp/models/day_ahead.hpp"

#include <algorithm>

#include "hydrosp/errors.hpp"
#include "hydrosp/models/dispatch.hpp"

namespace hydrosp::models {

void Penalties::validate() const {
  if (peak_first < 0 || peak_end > 24 || peak_first > peak_end) throw ConfigError("invalid peak window");
  for (double a : {alpha_peak, alpha_offpeak}) {
    if (!(a >= 0.0 && a < 1.0)) throw ConfigError("surplus factor must lie in [0, 1)");
  }
  for (double b : {beta_peak, beta_offpeak}) {
    if (!(b > 1.0)) throw ConfigError("shortage factor must exceed 1");
  }
}

double total_capacity(const hydro::NetworkView& view) {
  double cap = 0.0;
  for (const hydro::PlantView& p : view.plants) cap += p.data.capacity_mw;
  return cap;
}

std::vector<double> clean_bids(const BidLayout& L, std::span<const double> x, std::span<const scenarios::Block> blocks,
                               double capacity_mw) {
  if (static_cast<int>(x.size()) < L.size()) throw StructuralError("first-stage vector shorter than the bid layout");
  std::vector<double> out(x.begin(), x.end());
  for (int j = 0; j < L.size(); ++j) out[j] = std::max(0.0, out[j]);
  for (int t = 0; t < L.hours; ++t) {
    std::vector<int> parts{L.xI(t)};
    if (L.levels > 0) parts.push_back(L.xD(L.levels - 1, t));
    for (int b = 0; b < L.blocks; ++b) {
      if (!blocks[b].contains(t)) continue;
      for (int i = L.levels - 1; i >= 0; --i) parts.push_back(L.xB(i, b));
    }
    double excess = -2.0 * capacity_mw;
    for (int j : parts) excess += out[j];
    for (int j : parts) {
      if (excess <= 0.0) break;
      const double cut = std::min(excess, out[j]);
      out[j] -= cut;
      excess -= cut;
    }
    for (int i = L.levels - 2; i >= 0; --i) out[L.xD(i, t)] = std::min(out[L.xD(i, t)], out[L.xD(i + 1, t)]);
  }
  return out;
}

BidLayout add_bids(lp::LinearProgram& first, int hours, int levels, std::span<const scenarios::Block> blocks,
                   double capacity_mw) {
  BidLayout L{hours, levels, static_cast<int>(blocks.size())};
  const double cap = 2.0 * capacity_mw;
  for (int t = 0; t < hours; ++t) first.add_column(0.0, 0.0, cap, "xI_" + std::to_string(t));
  for (int t = 0; t < hours; ++t) {
    for (int i = 0; i < levels; ++i) {
      first.add_column(0.0, 0.0, cap, "xD_" + std::to_string(i) + "_" + std::to_string(t));
    }
  }
  for (int b = 0; b < L.blocks; ++b) {
    for (int i = 0; i < levels; ++i) {
      first.add_column(0.0, 0.0, cap, "xB_" + std::to_string(i) + "_" + std::to_string(b));
    }
  }
  for (int t = 0; t < hours; ++t) {
    for (int i = 0; i + 1 < levels; ++i) {
      first.add_row({{L.xD(i, t), 1.0}, {L.xD(i + 1, t), -1.0}}, lp::RowSense::kLessEqual, 0.0);
    }
  }
  std::vector<lp::Term> terms;
  for (int t = 0; t < hours; ++t) {
    terms.clear();
    terms.push_back({L.xI(t), 1.0});
    if (levels > 0) terms.push_back({L.xD(levels - 1, t), 1.0});
    for (int b = 0; b < L.blocks; ++b) {
      if (!blocks[b].contains(t)) continue;
      for (int i = 0; i < levels; ++i) terms.push_back({L.xB(i, b), 1.0});
    }
    first.add_row(terms, lp::RowSense::kLessEqual, cap, "cap_" + std::to_string(t));
  }
  return L;
}

namespace {

void check_spec(const DayAheadSpec& spec) {
  spec.penalties.validate();
  const int hours = spec.levels.hours();
  if (hours < 1 || spec.levels.count() < 1) throw ConfigError("day-ahead model needs price levels");
  for (const auto& row : spec.levels.hourly) {
    if (static_cast<int>(row.size()) != spec.levels.count()) throw ConfigError("ragged price levels");
  }
  for (const scenarios::Block& b : spec.blocks) {
    if (b.first < 0 || b.last < b.first || b.last >= hours) throw ConfigError("block outside the horizon");
  }
  if (!spec.ignore_water_value) {
    if (spec.water_value.empty()) throw ConfigError("day-ahead model needs water-value cuts");
    spec.water_value.validate(spec.network.size());
  }
}

}  // namespace

DayAheadRecourse day_ahead_recourse_layout(const DayAheadSpec& spec) {
  DayAheadRecourse r;
  r.hours = spec.levels.hours();
  r.blocks = static_cast<int>(spec.blocks.size());
  r.y0 = 0;
  r.yb0 = r.hours;
  r.plus0 = r.yb0 + r.blocks;
  r.minus0 = r.plus0 + r.hours;
  const int H = spec.network.size();
  const int T = r.hours;
  r.network.plants = H;
  r.network.periods = T;
  r.network.q0 = r.minus0 + T;
  r.network.s0 = r.network.q0 + 2 * H * T;
  r.network.m0 = r.network.s0 + H * T;
  r.network.p0 = r.network.m0 + H * T;
  r.w0 = r.network.p0 + T;
  r.groups = spec.ignore_water_value ? 0 : spec.water_value.groups;
  // Rows: dispatch (T), block (B), then the network (H*T flow, T production), then load (T), then cuts.
  r.network.flow_row0 = T + r.blocks;
  r.network.production_row0 = r.network.flow_row0 + H * T;
  return r;
}

std::shared_ptr<const sp::TwoStageProgram> build_day_ahead(const DayAheadSpec& spec) {
  check_spec(spec);
  const int T = spec.levels.hours();
  const int P = spec.levels.count();
  lp::LinearProgram first;
  const BidLayout bids = add_bids(first, T, P, spec.blocks, total_capacity(spec.network));
  const std::vector<std::vector<double>> block_levels = scenarios::block_price_levels(spec.levels, spec.blocks);
  const DayAheadRecourse layout = day_ahead_recourse_layout(spec);

  auto generator = [spec, bids, block_levels, layout](const sp::ScenarioSample& sample) {
    const int T = bids.hours;
    const int B = bids.blocks;
    if (sample.periods() != T) throw StructuralError("scenario length does not match the bid horizon");
    sp::Subproblem sub;
    lp::LinearProgram& lp = sub.recourse;
    for (int t = 0; t < T; ++t) lp.add_column(sample.price[t], -lp::kInfinity, lp::kInfinity);
    for (int b = 0; b < B; ++b) {
      const double mean = block_mean_price(sample.price, spec.blocks[b]);
      lp.add_column(spec.blocks[b].size() * mean, -lp::kInfinity, lp::kInfinity);
    }
    for (int t = 0; t < T; ++t) lp.add_column(-spec.penalties.beta(t) * sample.price[t], 0.0, lp::kInfinity);
    for (int t = 0; t < T; ++t) lp.add_column(spec.penalties.alpha(t) * sample.price[t], 0.0, lp::kInfinity);

    for (int t = 0; t < T; ++t) {
      const int row = lp.add_row({{layout.y(t), 1.0}}, lp::RowSense::kEqual, 0.0);
      sub.technology.push_back({row, bids.xI(t), -1.0});
      const std::vector<double> w = dispatch_weights(sample.price[t], spec.levels.hourly[t]);
      for (int i = 0; i < bids.levels; ++i) {
        if (w[i] != 0.0) sub.technology.push_back({row, bids.xD(i, t), -w[i]});
      }
    }
    for (int b = 0; b < B; ++b) {
      const int row = lp.add_row({{layout.yb(b), 1.0}}, lp::RowSense::kEqual, 0.0);
      const std::vector<double> accept =
          block_acceptance(block_mean_price(sample.price, spec.blocks[b]), block_levels[b]);
      for (int i = 0; i < bids.levels; ++i) {
        if (accept[i] != 0.0) sub.technology.push_back({row, bids.xB(i, b), -1.0});
      }
    }
    const NetworkColumns net = add_network(lp, spec.network, sample, T);
    std::vector<lp::Term> terms;
    for (int t = 0; t < T; ++t) {
      terms.clear();
      terms.push_back({layout.y(t), 1.0});
      for (int b = 0; b < B; ++b) {
        if (spec.blocks[b].contains(t)) terms.push_back({layout.yb(b), 1.0});
      }
      terms.push_back({net.P(t), -1.0});
      terms.push_back({layout.plus(t), -1.0});
      terms.push_back({layout.minus(t), 1.0});
      lp.add_row(terms, lp::RowSense::kEqual, 0.0);
    }
    for (int g = 0; g < layout.groups; ++g) lp.add_column(1.0, -lp::kInfinity, lp::kInfinity);
    const double R = spec.network.resolution.hours_per_period;
    for (const WaterValueCut& c : spec.ignore_water_value ? std::vector<WaterValueCut>{} : spec.water_value.cuts) {
      terms.clear();
      terms.push_back({layout.W(c.group), 1.0});
      for (int h = 0; h < net.plants; ++h) terms.push_back({net.M(h, T - 1), -c.slope[h] * R});
      lp.add_row(terms, lp::RowSense::kLessEqual, c.intercept);
    }
    return sub;
  };
  return std::make_shared<const sp::TwoStageProgram>(sp::Sense::kMaximize, std::move(first), std::vector<int>{},
                                                     std::move(generator));
}

}  // namespace hydrosp::models

#include "hydrosp/models/maintenance.hpp"

#include <cmath>

#include "hydrosp/errors.hpp"
#include "hydrosp/models/dispatch.hpp"

namespace hydrosp::models {

MaintenanceLayout maintenance_layout(const MaintenanceSpec& spec) {
  MaintenanceLayout L;
  L.bids = {spec.levels.hours(), spec.levels.count(), 0};
  L.plants = spec.network.size();
  L.s0 = L.bids.size();
  return L;
}

std::vector<int> maintenance_durations(const hydro::NetworkView& view) {
  std::vector<int> d;
  for (const hydro::PlantView& p : view.plants) d.push_back(static_cast<int>(std::lround(p.data.maintenance_hours)));
  return d;
}

std::shared_ptr<const sp::TwoStageProgram> build_maintenance(const MaintenanceSpec& spec) {
  spec.penalties.validate();
  const int T = spec.levels.hours();
  const int H = spec.network.size();
  if (T < 1 || spec.levels.count() < 1) throw ConfigError("maintenance model needs price levels");
  if (static_cast<int>(spec.durations.size()) != H) throw ConfigError("one maintenance duration per plant required");
  for (int h = 0; h < H; ++h) {
    const int D = spec.durations[h];
    if (D < 0 || D > T) {
      throw ConfigError("maintenance of " + spec.network.plants[h].data.name + " (" + std::to_string(D) +
                        " h) does not fit in " + std::to_string(T) + " h");
    }
  }

  lp::LinearProgram first;
  const std::vector<scenarios::Block> no_blocks;
  add_bids(first, T, spec.levels.count(), no_blocks, total_capacity(spec.network));
  const MaintenanceLayout L = maintenance_layout(spec);
  std::vector<int> binaries;
  for (int h = 0; h < H; ++h) {
    const double upper = spec.durations[h] == 0 ? 0.0 : 1.0;
    for (int t = 0; t < T; ++t) {
      binaries.push_back(first.add_column(0.0, 0.0, upper, "s_" + std::to_string(h) + "_" + std::to_string(t)));
    }
  }
  std::vector<lp::Term> terms;
  for (int h = 0; h < H; ++h) {
    const int D = spec.durations[h];
    if (D == 0) continue;
    terms.clear();
    for (int t = 0; t < T; ++t) terms.push_back({L.s(h, t), 1.0});
    first.add_row(terms, lp::RowSense::kEqual, D);
    if (D == 1) continue;
    // A run starting at t must cover t + D - 1; a start that would overrun the horizon is forbidden.
    for (int t = 0; t < T; ++t) {
      terms.clear();
      terms.push_back({L.s(h, t), 1.0});
      if (t > 0) terms.push_back({L.s(h, t - 1), -1.0});
      if (t + D - 1 < T) terms.push_back({L.s(h, t + D - 1), -1.0});
      first.add_row(terms, lp::RowSense::kLessEqual, 0.0);
    }
  }

  auto generator = [spec, L](const sp::ScenarioSample& sample) {
    const int T = L.bids.hours;
    if (sample.periods() != T) throw StructuralError("scenario length does not match the bid horizon");
    sp::Subproblem sub;
    lp::LinearProgram& lp = sub.recourse;
    const int y0 = lp.num_columns();
    for (int t = 0; t < T; ++t) lp.add_column(sample.price[t], -lp::kInfinity, lp::kInfinity);
    const int plus0 = lp.num_columns();
    for (int t = 0; t < T; ++t) lp.add_column(-spec.penalties.beta(t) * sample.price[t], 0.0, lp::kInfinity);
    const int minus0 = lp.num_columns();
    for (int t = 0; t < T; ++t) lp.add_column(spec.penalties.alpha(t) * sample.price[t], 0.0, lp::kInfinity);
    for (int t = 0; t < T; ++t) {
      const int row = lp.add_row({{y0 + t, 1.0}}, lp::RowSense::kEqual, 0.0);
      sub.technology.push_back({row, L.bids.xI(t), -1.0});
      const std::vector<double> w = dispatch_weights(sample.price[t], spec.levels.hourly[t]);
      for (int i = 0; i < L.bids.levels; ++i) {
        if (w[i] != 0.0) sub.technology.push_back({row, L.bids.xD(i, t), -w[i]});
      }
    }
    const NetworkColumns net = add_network(lp, spec.network, sample, T);
    for (int t = 0; t < T; ++t) {
      lp.add_row({{y0 + t, 1.0}, {net.P(t), -1.0}, {plus0 + t, -1.0}, {minus0 + t, 1.0}}, lp::RowSense::kEqual, 0.0);
    }
    for (int h = 0; h < L.plants; ++h) {
      if (spec.durations[h] == 0) continue;
      const hydro::Segments& seg = spec.network.plants[h].segments;
      for (int s = 0; s < 2; ++s) {
        const double qbar = s == 0 ? seg.qbar1 : seg.qbar2;
        for (int t = 0; t < T; ++t) {
          const int row = lp.add_row({{net.Q(h, s, t), 1.0}}, lp::RowSense::kLessEqual, qbar);
          sub.technology.push_back({row, L.s(h, t), qbar});
        }
      }
    }
    return sub;
  };
  return std::make_shared<const sp::TwoStageProgram>(sp::Sense::kMaximize, std::move(first), std::move(binaries),
                                                     std::move(generator));
}

}  // namespace hydrosp::models

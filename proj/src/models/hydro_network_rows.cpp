#include "hydrosp/models/hydro_network_rows.hpp"

#include <vector>

#include "hydrosp/errors.hpp"

namespace hydrosp::models {

NetworkColumns add_network(lp::LinearProgram& lp, const hydro::NetworkView& view, const sp::ScenarioSample& sample,
                           int periods, const NetworkOptions& options) {
  const int H = view.size();
  if (sample.plants() != H) {
    throw StructuralError("scenario has inflow for " + std::to_string(sample.plants()) + " plants, river has " +
                          std::to_string(H));
  }
  if (sample.periods() < periods) {
    throw StructuralError("scenario covers " + std::to_string(sample.periods()) + " periods, model needs " +
                          std::to_string(periods));
  }
  NetworkColumns c;
  c.plants = H;
  c.periods = periods;

  c.q0 = lp.num_columns();
  for (int h = 0; h < H; ++h) {
    const hydro::Segments& seg = view.plants[h].segments;
    for (int s = 0; s < 2; ++s) {
      const double cap = options.discharge_bounds ? (s == 0 ? seg.qbar1 : seg.qbar2) : lp::kInfinity;
      for (int t = 0; t < periods; ++t) lp.add_column(0.0, 0.0, cap);
    }
  }
  c.s0 = lp.num_columns();
  for (int h = 0; h < H; ++h) {
    for (int t = 0; t < periods; ++t) lp.add_column(0.0, 0.0, lp::kInfinity);
  }
  c.m0 = lp.num_columns();
  for (int h = 0; h < H; ++h) {
    for (int t = 0; t < periods; ++t) lp.add_column(0.0, 0.0, view.plants[h].max_volume);
  }
  c.p0 = lp.num_columns();
  for (int t = 0; t < periods; ++t) lp.add_column(0.0, 0.0, lp::kInfinity);

  std::vector<lp::Term> terms;
  c.flow_row0 = lp.num_rows();
  for (int h = 0; h < H; ++h) {
    for (int t = 0; t < periods; ++t) {
      terms.clear();
      terms.push_back({c.M(h, t), 1.0});
      if (t > 0) terms.push_back({c.M(h, t - 1), -1.0});
      terms.push_back({c.Q(h, 0, t), 1.0});
      terms.push_back({c.Q(h, 1, t), 1.0});
      terms.push_back({c.S(h, t), 1.0});
      for (int i : view.network.upstream(h)) {
        const int tq = t - view.plants[i].delay_discharge;
        const int ts = t - view.plants[i].delay_spill;
        if (tq >= 0) {
          terms.push_back({c.Q(i, 0, tq), -1.0});
          terms.push_back({c.Q(i, 1, tq), -1.0});
        }
        if (ts >= 0) terms.push_back({c.S(i, ts), -1.0});
      }
      double rhs = sample.inflow[h][t];
      if (t == 0 && options.initial_volume_in_rhs) rhs += view.plants[h].initial_volume;
      lp.add_row(terms, lp::RowSense::kEqual, rhs);
    }
  }
  c.production_row0 = lp.num_rows();
  for (int t = 0; t < periods; ++t) {
    terms.clear();
    terms.push_back({c.P(t), 1.0});
    for (int h = 0; h < H; ++h) {
      const hydro::Segments& seg = view.plants[h].segments;
      terms.push_back({c.Q(h, 0, t), -seg.mu1});
      terms.push_back({c.Q(h, 1, t), -seg.mu2});
    }
    lp.add_row(terms, lp::RowSense::kEqual, 0.0);
  }
  return c;
}

}  // namespace hydrosp::models

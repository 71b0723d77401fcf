#include "hydrosp/models/capacity.hpp"

#include <cmath>

#include "hydrosp/errors.hpp"
#include "hydrosp/models/hydro_network_rows.hpp"

namespace hydrosp::models {

int capacity_periods(const CapacitySpec& spec) {
  const int R = spec.network.resolution.hours_per_period;
  if (spec.horizon_days < 1) throw ConfigError("capacity horizon must be at least one day");
  if (R < 1 || (spec.horizon_days * 24) % R != 0) {
    throw ConfigError("horizon of " + std::to_string(spec.horizon_days) + " days is not a whole number of " +
                      std::to_string(R) + "-hour periods");
  }
  return spec.horizon_days * 24 / R;
}

std::shared_ptr<const sp::TwoStageProgram> build_capacity(const CapacitySpec& spec) {
  const int periods = capacity_periods(spec);
  if (!(spec.expansion_cap_mw >= 0.0) || !std::isfinite(spec.expansion_cap_mw)) {
    throw ConfigError("expansion cap must be a finite non-negative number");
  }
  const bool frozen = !std::isfinite(spec.cost.unit_cost);
  const double unit = frozen ? 0.0 : 1e6 * equivalent_cost(spec.horizon_days, spec.cost);
  lp::LinearProgram first;
  std::vector<lp::Term> total;
  for (int h = 0; h < spec.network.size(); ++h) {
    const double upper = frozen ? 0.0 : spec.expansion_cap_mw;
    total.push_back({first.add_column(-unit, 0.0, upper, "dP_" + spec.network.plants[h].data.name), 1.0});
  }
  first.add_row(total, lp::RowSense::kLessEqual, spec.expansion_cap_mw, "expansion_cap");

  const hydro::NetworkView view = spec.network;
  auto generator = [view, periods](const sp::ScenarioSample& sample) {
    sp::Subproblem sub;
    NetworkOptions opts;
    opts.discharge_bounds = false;
    const NetworkColumns net = add_network(sub.recourse, view, sample, periods, opts);
    for (int t = 0; t < periods; ++t) sub.recourse.set_cost(net.P(t), sample.price[t]);
    for (int h = 0; h < view.size(); ++h) {
      const hydro::PlantView& p = view.plants[h];
      const double ratio = p.data.max_discharge / p.data.capacity_mw;
      for (int s = 0; s < 2; ++s) {
        const double qbar = s == 0 ? p.segments.qbar1 : p.segments.qbar2;
        const double share = qbar / p.data.max_discharge;
        for (int t = 0; t < periods; ++t) {
          const int row = sub.recourse.add_row({{net.Q(h, s, t), 1.0}}, lp::RowSense::kLessEqual, qbar);
          sub.technology.push_back({row, h, -share * ratio});
        }
      }
    }
    return sub;
  };
  return std::make_shared<const sp::TwoStageProgram>(sp::Sense::kMaximize, std::move(first), std::vector<int>{},
                                                     std::move(generator));
}

}  // namespace hydrosp::models

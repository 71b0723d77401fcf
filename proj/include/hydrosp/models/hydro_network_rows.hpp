#pragma once

#include "hydrosp/hydro/resolution.hpp"
#include "hydrosp/lp/linear_program.hpp"
#include "hydrosp/sp/scenario.hpp"

namespace hydrosp::models {

// Column and row positions of the physical part of a recourse problem:
// discharge per segment Q, spillage S, end-of-period volume M and total
// production P, with one flow-conservation row per plant and period and one
// production row per period.
struct NetworkColumns {
  int plants = 0;
  int periods = 0;
  int q0 = 0, s0 = 0, m0 = 0, p0 = 0;
  int flow_row0 = 0, production_row0 = 0;

  int Q(int h, int s, int t) const { return q0 + (h * 2 + s) * periods + t; }
  int S(int h, int t) const { return s0 + h * periods + t; }
  int M(int h, int t) const { return m0 + h * periods + t; }
  int P(int t) const { return p0 + t; }
  int flow_row(int h, int t) const { return flow_row0 + h * periods + t; }
  int production_row(int t) const { return production_row0 + t; }
};

struct NetworkOptions {
  // Segment limits as column bounds; otherwise Q is only bounded below and
  // the caller adds its own discharge rows.
  bool discharge_bounds = true;
  // Initial volume as a constant in the first flow row; otherwise the caller
  // supplies it through the technology matrix.
  bool initial_volume_in_rhs = true;
};

// Appends the columns and rows described above. Costs are left at zero.
// Upstream releases from before the first period contribute nothing.
NetworkColumns add_network(lp::LinearProgram& lp, const hydro::NetworkView& view, const sp::ScenarioSample& sample,
                           int periods, const NetworkOptions& options = {});

}  // namespace hydrosp::models

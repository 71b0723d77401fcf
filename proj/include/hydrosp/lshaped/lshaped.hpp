#pragma once

#include <ostream>
#include <vector>

#include "hydrosp/lp/branch_and_bound.hpp"
#include "hydrosp/lshaped/cut.hpp"
#include "hydrosp/lshaped/trust_region.hpp"
#include "hydrosp/sp/two_stage_program.hpp"

namespace hydrosp::lshaped {

enum class Formulation { kMultiCut, kSingleCut, kPartial };

struct LShapedConfig {
  Formulation formulation = Formulation::kMultiCut;
  int groups = 1;  // used by kPartial, clamped to [1, N]
  // 0 selects the default: 5 for binary masters, never otherwise.
  int consolidation_age = 0;
  TrustRegionConfig trust_region;
  int max_iterations = 1000;
  double gap_tolerance = 1e-8;  // relative to max(1, |objective|)
  int threads = 1;
  lp::MbpOptions master;
};

struct IterationRecord {
  int iteration = 0;
  double master_objective = 0.0;   // user sense
  double expected_recourse = 0.0;  // user sense, at the master point
  double gap = 0.0;
  double radius = 0.0;  // 0 when the trust region is off
  int cuts_added = 0;
  int cuts_removed = 0;
  double wall_time_ms = 0.0;
};

struct LShapedResult {
  bool converged = false;
  std::vector<double> x;           // best first-stage point found
  double objective = 0.0;          // user sense value at x
  double bound = 0.0;              // best valid bound from the master, user sense
  std::vector<double> recourse;    // Q_s at x, user sense
  std::vector<Cut> cuts;           // final pool, minimisation form
  std::vector<double> group_probability;
  std::vector<IterationRecord> log;
  int iterations = 0;
};

int group_count(const LShapedConfig& config, int scenarios);

LShapedResult solve(const sp::FiniteProgram& fp, const LShapedConfig& config = {});

// Columns: iteration, master_obj, expected_recourse, gap, delta, cuts_added,
// cuts_removed, wall_time_ms. Timings are left blank unless requested.
void write_iteration_log(std::ostream& out, const std::vector<IterationRecord>& log, bool with_timings);

}  // namespace hydrosp::lshaped

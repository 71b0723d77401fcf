#pragma once

#include <span>

#include "hydrosp/lp/simplex.hpp"

namespace hydrosp::lp {

struct MbpOptions {
  long node_limit = 200'000;
  // A node is pruned when its relaxation bound is within this of the incumbent.
  double prune_tolerance = 1e-6;
  SimplexOptions simplex;
};

struct MbpSolution : LpSolution {
  long nodes = 0;
  bool has_incumbent = false;
};

// Best-first branch and bound over the listed binary columns (bounds must be
// within [0,1]). Ties in node bound are broken FIFO; branching picks the most
// fractional binary, lowest index first. The returned duals come from the LP
// with every binary fixed at its incumbent value.
MbpSolution solve_mbp(const LinearProgram& lp, std::span<const int> binaries, const MbpOptions& options = {});

}  // namespace hydrosp::lp

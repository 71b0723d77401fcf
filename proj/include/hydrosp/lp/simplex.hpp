#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "hydrosp/lp/linear_program.hpp"

namespace hydrosp::lp {

// Contract tolerances shared by every solver in the kernel. The simplex works
// internally to tighter values so that the reported solution meets these.
struct Tolerances {
  double feasibility = 1e-8;
  double optimality = 1e-7;
  double integrality = 1e-6;
};

inline constexpr Tolerances kTolerances{};

enum class SolveStatus {
  kOptimal,
  kInfeasible,
  kUnbounded,
  kIterationLimit,
  kNodeLimit,
  kNumericalFailure,
};

std::string_view to_string(SolveStatus status);

enum class VarStatus : std::uint8_t { kBasic, kAtLower, kAtUpper, kFreeZero };

// Status of every structural column followed by every row's logical.
struct Basis {
  std::vector<VarStatus> columns;
  std::vector<VarStatus> rows;
  bool empty() const { return columns.empty() && rows.empty(); }
};

struct LpSolution {
  SolveStatus status = SolveStatus::kNumericalFailure;
  double objective = 0.0;
  std::vector<double> primal;
  // One multiplier per row: d(objective)/d(rhs_i).
  std::vector<double> dual;
  std::vector<double> reduced_cost;
  std::vector<double> row_activity;
  Basis basis;
  long iterations = 0;

  bool optimal() const { return status == SolveStatus::kOptimal; }
};

struct SimplexOptions {
  long max_iterations = 2'000'000;
  int refactor_interval = 100;
  // Consecutive degenerate pivots before switching to Bland's rule.
  int stall_threshold = 60;
  double primal_tolerance = 1e-9;
  double dual_tolerance = 1e-9;
};

// Bounded-variable revised primal simplex with a composite phase 1.
// A warm-start basis of matching shape is used when it factorizes;
// otherwise the solve starts from the all-logical basis.
LpSolution solve_lp(const LinearProgram& lp, const SimplexOptions& options = {},
                    const Basis* warm_start = nullptr);

}  // namespace hydrosp::lp

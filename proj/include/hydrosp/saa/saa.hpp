#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "hydrosp/lshaped/lshaped.hpp"
#include "hydrosp/saa/confidence_report.hpp"
#include "hydrosp/sp/two_stage_program.hpp"

namespace hydrosp::saa {

// Draws `count` scenarios; identical seeds give identical draws.
using Sampler = std::function<std::vector<sp::ScenarioSample>(int count, std::uint64_t seed)>;

struct InstanceSolution {
  std::vector<double> x;
  double objective = 0.0;  // user sense
  bool converged = true;
};

using InstanceSolver = std::function<InstanceSolution(const sp::FiniteProgram&)>;

InstanceSolver lshaped_solver(lshaped::LShapedConfig config);
InstanceSolver deterministic_solver();

struct SaaProblem {
  std::shared_ptr<const sp::TwoStageProgram> program;
  Sampler sampler;
  InstanceSolver solver;
  int threads = 1;
};

// Random streams under the master seed.
enum Stream : std::uint64_t {
  kCandidateStream = 1,
  kBoundStream = 2,
  kEvaluationStream = 3,
  kExpectedValueStream = 4,
  kEevStream = 5,
};

// Mean and sample standard deviation.
struct SampleStats {
  double mean = 0.0;
  double stddev = 0.0;
};
SampleStats sample_stats(std::span<const double> values);

// Interval mean +- t_{alpha/2, n-1} s / sqrt(n). Needs at least two values.
ConfidenceReport t_interval(std::span<const double> values, double alpha);

// Evaluates x_hat on T independent batches of N scenarios.
ConfidenceReport decision_value_interval(const SaaProblem& problem, std::span<const double> x_hat, int N, int T,
                                         double alpha, std::uint64_t seed);

// Solves M independent N-scenario instances.
ConfidenceReport optimal_value_bound(const SaaProblem& problem, int N, int M, double alpha, std::uint64_t seed);

// Candidate from a fresh N-scenario instance, then the two one-sided
// estimates combined into an interval around the optimal value.
ConfidenceReport vrp_interval(const SaaProblem& problem, int N, int M, int T, double alpha, std::uint64_t seed);

struct RefineResult {
  ConfidenceReport final_report;
  std::vector<ConfidenceReport> history;
};

inline const std::vector<int> kDefaultSchedule{10, 50, 100, 500, 1000, 2000};

// Walks the schedule until width / |estimate| <= rel_width_tol.
RefineResult saa_refine(const SaaProblem& problem, double alpha, double rel_width_tol, std::span<const int> schedule,
                        int M, int T, std::uint64_t seed);

// Interval for the expected result of the fixed decision x_bar over N_bar
// fresh scenarios, using the normal quantile.
ConfidenceReport eev_interval(const SaaProblem& problem, std::span<const double> x_bar, int N_bar, double alpha,
                              std::uint64_t seed);

// Intervals closer than this, relative to the estimates, count as touching.
inline constexpr double kTouchingTolerance = 1e-9;

// VSS = VRP - EEV when maximising, EEV - VRP when minimising. The VSS is
// significant when the VRP and EEV intervals are disjoint.
ConfidenceReport vss_interval(const ConfidenceReport& vrp, const ConfidenceReport& eev, sp::Sense sense);

}  // namespace hydrosp::saa

#include "hydrosp/saa/saa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hydrosp/errors.hpp"
#include "hydrosp/saa/quantiles.hpp"
#include "hydrosp/sp/deterministic_equivalent.hpp"
#include "hydrosp/util/seed.hpp"

namespace hydrosp::saa {

InstanceSolver lshaped_solver(lshaped::LShapedConfig config) {
  return [config](const sp::FiniteProgram& fp) {
    const lshaped::LShapedResult r = lshaped::solve(fp, config);
    return InstanceSolution{r.x, r.objective, r.converged};
  };
}

InstanceSolver deterministic_solver() {
  return [](const sp::FiniteProgram& fp) {
    const sp::DeterministicSolution r = sp::solve_deterministic_equivalent(fp);
    if (!r.optimal()) {
      throw NumericalError("deterministic equivalent not solved: " + std::string(lp::to_string(r.status)));
    }
    return InstanceSolution{r.x, r.objective, true};
  };
}

SampleStats sample_stats(std::span<const double> values) {
  SampleStats s;
  if (values.empty()) return s;
  for (double v : values) s.mean += v;
  s.mean /= static_cast<double>(values.size());
  if (values.size() < 2) return s;
  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
  return s;
}

ConfidenceReport t_interval(std::span<const double> values, double alpha) {
  if (values.size() < 2) throw std::invalid_argument("an interval needs at least two values");
  if (!(alpha > 0.0 && alpha < 0.5)) throw std::invalid_argument("alpha must lie in (0, 0.5)");
  const SampleStats st = sample_stats(values);
  const double n = static_cast<double>(values.size());
  const double hw = t_quantile(alpha / 2.0, n - 1.0) * st.stddev / std::sqrt(n);
  ConfidenceReport r;
  r.lo = st.mean - hw;
  r.hi = st.mean + hw;
  r.estimate = st.mean;
  r.alpha = alpha;
  return r;
}

namespace {

sp::FiniteProgram instance(const SaaProblem& problem, int N, std::uint64_t seed) {
  return sp::FiniteProgram::uniform(problem.program, problem.sampler(N, seed));
}

}  // namespace

ConfidenceReport decision_value_interval(const SaaProblem& problem, std::span<const double> x_hat, int N, int T,
                                         double alpha, std::uint64_t seed) {
  if (T < 2) throw std::invalid_argument("decision value interval needs T >= 2 batches");
  std::vector<double> values;
  values.reserve(T);
  sp::EvaluateOptions opts;
  opts.threads = problem.threads;
  for (int b = 0; b < T; ++b) {
    const sp::FiniteProgram fp = instance(problem, N, util::child_seed(seed, kEvaluationStream, b));
    values.push_back(sp::evaluate_decision(fp, x_hat, opts).value);
  }
  ConfidenceReport r = t_interval(values, alpha);
  r.kind = problem.program->maximize() ? EstimatorKind::kLower : EstimatorKind::kUpper;
  r.N = N;
  r.T = T;
  r.seed = seed;
  return r;
}

ConfidenceReport optimal_value_bound(const SaaProblem& problem, int N, int M, double alpha, std::uint64_t seed) {
  if (M < 2) throw std::invalid_argument("optimal value bound needs M >= 2 instances");
  std::vector<double> values;
  values.reserve(M);
  for (int i = 0; i < M; ++i) {
    const std::uint64_t instance_seed = util::child_seed(seed, kBoundStream, i);
    const InstanceSolution sol = problem.solver(instance(problem, N, instance_seed));
    if (!sol.converged) {
      throw NumericalError("instance with seed " + std::to_string(instance_seed) + " did not converge");
    }
    values.push_back(sol.objective);
  }
  ConfidenceReport r = t_interval(values, alpha);
  r.kind = problem.program->maximize() ? EstimatorKind::kUpper : EstimatorKind::kLower;
  r.N = N;
  r.M = M;
  r.seed = seed;
  return r;
}

ConfidenceReport vrp_interval(const SaaProblem& problem, int N, int M, int T, double alpha, std::uint64_t seed) {
  const std::uint64_t candidate_seed = util::child_seed(seed, kCandidateStream, 0);
  const InstanceSolution candidate = problem.solver(instance(problem, N, candidate_seed));
  if (!candidate.converged) {
    throw NumericalError("candidate instance with seed " + std::to_string(candidate_seed) + " did not converge");
  }
  const ConfidenceReport value = decision_value_interval(problem, candidate.x, N, T, alpha, seed);
  const ConfidenceReport bound = optimal_value_bound(problem, N, M, alpha, seed);
  // Minimising: [L - hw, U + hw]. Maximising mirrors the roles.
  double a, b;
  if (problem.program->maximize()) {
    a = value.lo;
    b = bound.hi;
  } else {
    a = bound.lo;
    b = value.hi;
  }
  ConfidenceReport r;
  r.kind = EstimatorKind::kVrp;
  r.lo = std::min(a, b);
  r.hi = std::max(a, b);
  r.estimate = 0.5 * (r.lo + r.hi);
  r.N = N;
  r.M = M;
  r.T = T;
  r.alpha = alpha;
  r.seed = seed;
  return r;
}

RefineResult saa_refine(const SaaProblem& problem, double alpha, double rel_width_tol, std::span<const int> schedule,
                        int M, int T, std::uint64_t seed) {
  if (schedule.empty()) throw std::invalid_argument("empty sample-size schedule");
  for (std::size_t i = 1; i < schedule.size(); ++i) {
    if (schedule[i] <= schedule[i - 1]) throw std::invalid_argument("sample-size schedule must increase");
  }
  RefineResult out;
  for (int N : schedule) {
    const ConfidenceReport r = vrp_interval(problem, N, M, T, alpha, seed);
    out.history.push_back(r);
    out.final_report = r;
    const double w = r.width();
    const double ratio = w == 0.0 ? 0.0 : (r.estimate == 0.0 ? std::numeric_limits<double>::infinity()
                                                             : w / std::abs(r.estimate));
    if (ratio <= rel_width_tol) break;
  }
  return out;
}

ConfidenceReport eev_interval(const SaaProblem& problem, std::span<const double> x_bar, int N_bar, double alpha,
                              std::uint64_t seed) {
  if (N_bar < 2) throw std::invalid_argument("EEV interval needs at least two scenarios");
  if (!(alpha > 0.0 && alpha < 0.5)) throw std::invalid_argument("alpha must lie in (0, 0.5)");
  const sp::FiniteProgram fp = instance(problem, N_bar, util::child_seed(seed, kEevStream, 0));
  sp::EvaluateOptions opts;
  opts.threads = problem.threads;
  const sp::Evaluation ev = sp::evaluate_decision(fp, x_bar, opts);
  std::vector<double> values(ev.recourse.size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = ev.first_stage + ev.recourse[i];
  const SampleStats st = sample_stats(values);
  const double hw = normal_quantile(alpha / 2.0) * st.stddev / std::sqrt(static_cast<double>(N_bar));
  ConfidenceReport r;
  r.kind = EstimatorKind::kEev;
  r.estimate = st.mean;
  r.lo = st.mean - hw;
  r.hi = st.mean + hw;
  r.N = N_bar;
  r.alpha = alpha;
  r.seed = seed;
  return r;
}

ConfidenceReport vss_interval(const ConfidenceReport& vrp, const ConfidenceReport& eev, sp::Sense sense) {
  if (vrp.alpha != eev.alpha) throw std::invalid_argument("VRP and EEV intervals use different alpha");
  ConfidenceReport r;
  r.kind = EstimatorKind::kVss;
  if (sense == sp::Sense::kMaximize) {
    r.lo = vrp.lo - eev.hi;
    r.hi = vrp.hi - eev.lo;
    r.estimate = vrp.estimate - eev.estimate;
  } else {
    r.lo = eev.lo - vrp.hi;
    r.hi = eev.hi - vrp.lo;
    r.estimate = eev.estimate - vrp.estimate;
  }
  const double slack = kTouchingTolerance * std::max({1.0, std::abs(vrp.estimate), std::abs(eev.estimate)});
  r.significant = vrp.hi + slack < eev.lo || eev.hi + slack < vrp.lo;
  r.N = vrp.N;
  r.M = vrp.M;
  r.T = vrp.T;
  r.alpha = vrp.alpha;
  r.seed = vrp.seed;
  return r;
}

}  // namespace hydrosp::saa

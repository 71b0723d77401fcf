#include "hydrosp/lshaped/lshaped.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <thread>

#include "hydrosp/errors.hpp"
#include "hydrosp/util/csv.hpp"

namespace hydrosp::lshaped {

int group_count(const LShapedConfig& config, int scenarios) {
  switch (config.formulation) {
    case Formulation::kMultiCut: return scenarios;
    case Formulation::kSingleCut: return 1;
    case Formulation::kPartial: return std::clamp(config.groups, 1, scenarios);
  }
  return scenarios;
}

namespace {

struct ScenarioWork {
  sp::Subproblem base;
  lp::LinearProgram lp;
  lp::Basis basis;
};

struct MasterPoint {
  lp::SolveStatus status = lp::SolveStatus::kNumericalFailure;
  std::vector<double> x;
  std::vector<double> theta;
  double objective = 0.0;  // canonical
};

class Solver {
 public:
  Solver(const sp::FiniteProgram& fp, const LShapedConfig& config) : fp_(fp), config_(config) {
    fp.validate();
    validate(config.trust_region);
    const sp::TwoStageProgram& prog = *fp.program;
    first_stage_ = prog.canonical_first_stage();
    n_ = first_stage_.num_columns();
    binaries_.assign(prog.binaries().begin(), prog.binaries().end());
    groups_ = group_count(config, fp.size());
    probability_.assign(groups_, 0.0);
    for (int s = 0; s < fp.size(); ++s) probability_[group_of(s, fp.size(), groups_)] += fp.probabilities[s];
    age_limit_ = config.consolidation_age > 0 ? config.consolidation_age
                                               : (binaries_.empty() ? kNeverConsolidate : 5);
    scenarios_.reserve(fp.size());
    for (int s = 0; s < fp.size(); ++s) {
      ScenarioWork w{prog.canonical_subproblem(fp.scenarios[s]), {}, {}};
      w.lp = w.base.recourse;
      scenarios_.push_back(std::move(w));
    }
    is_binary_.assign(n_, false);
    for (int j : binaries_) is_binary_[j] = true;
    range_ = 0.0;
    for (int j = 0; j < n_; ++j) {
      const double r = first_stage_.upper(j) - first_stage_.lower(j);
      if (!is_binary_[j] && std::isfinite(r)) range_ = std::max(range_, r);
    }
    if (range_ <= 0.0) range_ = 1.0;
  }

  LShapedResult run() {
    const auto start = std::chrono::steady_clock::now();
    const sp::TwoStageProgram& prog = *fp_.program;
    const double sign = prog.sign();
    LShapedResult result;
    result.group_probability = probability_;

    // Starting point: first stage on its own.
    std::vector<double> x0;
    {
      lp::LinearProgram alone = first_stage_;
      const lp::LpSolution s = binaries_.empty() ? lp::solve_lp(alone, config_.master.simplex)
                                                 : lp::solve_mbp(alone, binaries_, config_.master);
      if (!s.optimal()) {
        throw NumericalError("first stage alone not solvable: " + std::string(lp::to_string(s.status)));
      }
      x0 = s.primal;
    }

    const bool tr = config_.trust_region.enabled;
    const double max_radius = config_.trust_region.max_radius > 0.0 ? config_.trust_region.max_radius : range_;
    double radius = config_.trust_region.initial_radius > 0.0 ? config_.trust_region.initial_radius : 0.1 * range_;
    radius = std::min(radius, max_radius);

    std::vector<double> q_center;
    double f_center = evaluate(x0, q_center);
    add_cuts();
    std::vector<double> center = x0;
    double lower = -lp::kInfinity;

    result.x = center;
    result.recourse = q_center;
    double best = f_center;

    // Binary masters start from the cut pool of the relaxed master; its
    // bound is valid for the binary problem as well.
    int it0 = 1;
    if (!binaries_.empty()) {
      relaxed_ = true;
      const int age_limit = age_limit_;
      age_limit_ = kNeverConsolidate;
      double relaxed_best = lp::kInfinity;
      for (; it0 <= config_.max_iterations; ++it0) {
        const int added_before = added_;
        const MasterPoint m = solve_master(nullptr, 0.0);
        if (m.status != lp::SolveStatus::kOptimal) {
          throw NumericalError("relaxed master problem failed: " + std::string(lp::to_string(m.status)));
        }
        lower = std::max(lower, m.objective);
        std::vector<double> q;
        const double f = evaluate(m.x, q);
        relaxed_best = std::min(relaxed_best, f);
        IterationRecord rec;
        rec.iteration = it0;
        rec.master_objective = sign * m.objective;
        rec.expected_recourse = sign * (f - first_stage_.objective_value(m.x));
        rec.gap = relaxed_best - lower;
        const bool done = rec.gap <= config_.gap_tolerance * std::max(1.0, std::abs(relaxed_best));
        if (!done) add_cuts();
        update_ages(pool_, m.x, m.theta);
        rec.cuts_added = added_ - added_before;
        rec.wall_time_ms = elapsed_ms(start);
        result.log.push_back(rec);
        result.iterations = it0;
        if (done) break;
      }
      ++it0;
      for (Cut& c : pool_) c.age = 0;
      age_limit_ = age_limit;
      relaxed_ = false;
    }

    for (int it = it0; it <= config_.max_iterations; ++it) {
      const int added_before = added_;
      int removed = 0;
      const MasterPoint m = solve_master(tr ? &center : nullptr, radius);
      if (m.status != lp::SolveStatus::kOptimal) {
        throw NumericalError("master problem failed: " + std::string(lp::to_string(m.status)));
      }
      IterationRecord rec;
      rec.iteration = it;
      rec.master_objective = sign * m.objective;
      rec.radius = tr ? radius : 0.0;

      if (!tr) {
        lower = std::max(lower, m.objective);
        std::vector<double> q;
        const double f = evaluate(m.x, q);
        rec.expected_recourse = sign * (f - first_stage_.objective_value(m.x));
        if (f < best) {
          best = f;
          result.x = m.x;
          result.recourse = q;
        }
        rec.gap = best - lower;
        const bool done = rec.gap <= config_.gap_tolerance * std::max(1.0, std::abs(best));
        if (!done) add_cuts();
        update_ages(pool_, m.x, m.theta);
        removed = prune();
        rec.cuts_added = added_ - added_before;
        rec.cuts_removed = removed;
        rec.wall_time_ms = elapsed_ms(start);
        result.log.push_back(rec);
        if (done) {
          result.converged = true;
          result.iterations = it;
          break;
        }
        result.iterations = it;
        continue;
      }

      // Trust-region step around the incumbent centre. A step predicting no
      // decrease is checked against the master without the box.
      MasterPoint trial = m;
      double predicted = f_center - m.objective;
      const double tol = config_.gap_tolerance * std::max(1.0, std::abs(f_center));
      if (predicted <= tol) {
        MasterPoint global = solve_master(nullptr, 0.0);
        if (global.status != lp::SolveStatus::kOptimal) {
          throw NumericalError("master problem failed: " + std::string(lp::to_string(global.status)));
        }
        lower = std::max(lower, global.objective);
        if (f_center - lower <= tol) {
          rec.gap = f_center - lower;
          rec.expected_recourse = sign * (f_center - first_stage_.objective_value(center));
          rec.wall_time_ms = elapsed_ms(start);
          result.log.push_back(rec);
          result.iterations = it;
          result.converged = true;
          break;
        }
        predicted = f_center - global.objective;
        double reach = radius;
        for (std::size_t j = 0; j < center.size(); ++j) reach = std::max(reach, std::abs(global.x[j] - center[j]));
        radius = std::min(reach, max_radius);
        trial = std::move(global);
      }
      std::vector<double> q;
      const double f = evaluate(trial.x, q);
      rec.expected_recourse = sign * (f - first_stage_.objective_value(trial.x));
      add_cuts();
      const TrustRegionUpdate step = trust_region_step(predicted, f_center - f, radius, max_radius,
                                                       config_.trust_region);
      if (step.accept) {
        center = trial.x;
        f_center = f;
        q_center = q;
      }
      radius = std::max(step.radius, 1e-12 * range_);
      if (f_center < best) {
        best = f_center;
        result.x = center;
        result.recourse = q_center;
      }
      rec.gap = best - lower;
      update_ages(pool_, trial.x, trial.theta);
      removed = prune();
      rec.cuts_added = added_ - added_before;
      rec.cuts_removed = removed;
      rec.wall_time_ms = elapsed_ms(start);
      result.log.push_back(rec);
      result.iterations = it;
    }

    result.objective = sign * best;
    result.bound = sign * lower;
    for (double& q : result.recourse) q *= sign;
    result.cuts = pool_;
    return result;
  }

 private:
  static double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }

  // Canonical c x + sum pi_s Q_s; fills per-scenario Q_s and scenario cuts.
  double evaluate(const std::vector<double>& x, std::vector<double>& q) {
    const int n = fp_.size();
    q.assign(n, 0.0);
    last_cuts_.assign(n, Cut{});
    std::vector<int> failure(n, -1);
    auto work = [&](int s) {
      ScenarioWork& w = scenarios_[s];
      sp::apply_first_stage(w.base, x, w.lp);
      lp::LpSolution sol = lp::solve_lp(w.lp, {}, w.basis.empty() ? nullptr : &w.basis);
      if (sol.status == lp::SolveStatus::kInfeasible) {
        failure[s] = 0;
        return;
      }
      if (!sol.optimal()) {
        failure[s] = 1;
        return;
      }
      q[s] = sol.objective;
      last_cuts_[s] = optimality_cut(w.base, x, sol, n_);
      w.basis = std::move(sol.basis);
    };
    const int threads = std::max(1, std::min(config_.threads, n));
    if (threads == 1) {
      for (int s = 0; s < n; ++s) work(s);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
          for (int s = t; s < n; s += threads) work(s);
        });
      }
      for (auto& th : pool) th.join();
    }
    for (int s = 0; s < n; ++s) {
      if (failure[s] == 0) throw InfeasibleScenarioError(s);
      if (failure[s] == 1) throw NumericalError("recourse solve failed for scenario " + std::to_string(s));
    }
    double f = first_stage_.objective_value(x);
    for (int s = 0; s < n; ++s) f += fp_.probabilities[s] * q[s];
    return f;
  }

  // Adds the aggregated cuts from the most recent evaluation.
  void add_cuts() {
    std::vector<Cut> agg = aggregate(last_cuts_, fp_.probabilities, groups_);
    for (Cut& cut : agg) {
      if (is_duplicate(cut)) continue;
      pool_.push_back(std::move(cut));
      cut_status_.push_back(lp::VarStatus::kBasic);
      ++added_;
    }
  }

  int prune() {
    if (age_limit_ != kNeverConsolidate) {
      std::size_t k = 0;
      for (std::size_t i = 0; i < pool_.size(); ++i) {
        if (pool_[i].age < age_limit_) cut_status_[k++] = cut_status_[i];
      }
      cut_status_.resize(k);
    }
    return consolidate(pool_, age_limit_);
  }

  bool is_duplicate(const Cut& cut) const {
    for (const Cut& c : pool_) {
      if (c.group != cut.group) continue;
      const double scale = 1.0 + std::abs(cut.intercept);
      if (std::abs(c.intercept - cut.intercept) > 1e-12 * scale) continue;
      bool same = true;
      for (int j = 0; j < n_ && same; ++j) {
        same = std::abs(c.coefficients[j] - cut.coefficients[j]) <= 1e-12 * (1.0 + std::abs(cut.coefficients[j]));
      }
      if (same) return true;
    }
    return false;
  }

  MasterPoint solve_master(const std::vector<double>* center, double radius) {
    lp::LinearProgram master = first_stage_;
    std::vector<int> theta(groups_, -1);
    for (int g = 0; g < groups_; ++g) {
      if (probability_[g] > 0.0) {
        theta[g] = master.add_column(probability_[g], -lp::kInfinity, lp::kInfinity, "theta" + std::to_string(g));
      }
    }
    if (center) {
      std::vector<lp::Term> hamming;
      double ones = 0.0;
      for (int j = 0; j < n_; ++j) {
        const double c = (*center)[j];
        if (is_binary_[j]) {
          if (c > 0.5) {
            hamming.push_back({j, -1.0});
            ones += 1.0;
          } else {
            hamming.push_back({j, 1.0});
          }
          continue;
        }
        const double lo = std::max(first_stage_.lower(j), c - radius);
        const double hi = std::min(first_stage_.upper(j), c + radius);
        master.set_bounds(j, std::min(lo, hi), std::max(lo, hi));
      }
      if (!hamming.empty()) {
        const double k = std::max(1.0, std::floor(radius));
        master.add_row(hamming, lp::RowSense::kLessEqual, k - ones, "hamming");
      }
    }
    std::vector<lp::Term> terms;
    for (const Cut& cut : pool_) {
      terms.clear();
      terms.push_back({theta[cut.group], 1.0});
      for (int j = 0; j < n_; ++j) {
        if (cut.coefficients[j] != 0.0) terms.push_back({j, -cut.coefficients[j]});
      }
      master.add_row(terms, lp::RowSense::kGreaterEqual, cut.intercept);
    }

    lp::LpSolution sol;
    if (binaries_.empty() || relaxed_) {
      // Previous master basis with the slacks of new cuts basic.
      lp::Basis warm;
      if (!master_basis_.empty()) {
        warm.columns = master_basis_.columns;
        warm.rows = master_basis_.rows;
        warm.rows.insert(warm.rows.end(), cut_status_.begin(), cut_status_.end());
      }
      sol = lp::solve_lp(master, config_.master.simplex, warm.empty() ? nullptr : &warm);
      if (sol.optimal()) {
        const int m1 = first_stage_.num_rows();
        master_basis_.columns = sol.basis.columns;
        master_basis_.rows.assign(sol.basis.rows.begin(), sol.basis.rows.begin() + m1);
        std::copy(sol.basis.rows.begin() + m1, sol.basis.rows.end(), cut_status_.begin());
      }
    } else {
      sol = lp::solve_mbp(master, binaries_, config_.master);
    }
    MasterPoint out;
    out.status = sol.status;
    if (!sol.optimal()) return out;
    out.objective = sol.objective;
    out.x.assign(sol.primal.begin(), sol.primal.begin() + n_);
    if (!relaxed_) {
      for (int j : binaries_) out.x[j] = std::round(out.x[j]);
    }
    out.theta.assign(groups_, 0.0);
    for (int g = 0; g < groups_; ++g) {
      if (theta[g] >= 0) out.theta[g] = sol.primal[theta[g]];
    }
    return out;
  }

  const sp::FiniteProgram& fp_;
  const LShapedConfig& config_;
  lp::LinearProgram first_stage_;
  int n_ = 0;
  int groups_ = 1;
  int age_limit_ = kNeverConsolidate;
  bool relaxed_ = false;
  double range_ = 1.0;
  std::vector<int> binaries_;
  std::vector<bool> is_binary_;
  std::vector<double> probability_;
  std::vector<ScenarioWork> scenarios_;
  std::vector<Cut> last_cuts_;
  std::vector<Cut> pool_;
  std::vector<lp::VarStatus> cut_status_;  // master row status per pooled cut
  lp::Basis master_basis_;                 // structural columns and first-stage rows
  int added_ = 0;
};

}  // namespace

LShapedResult solve(const sp::FiniteProgram& fp, const LShapedConfig& config) {
  Solver solver(fp, config);
  return solver.run();
}

void write_iteration_log(std::ostream& out, const std::vector<IterationRecord>& log, bool with_timings) {
  using util::format_double;
  out << "iteration,master_obj,expected_recourse,gap,delta,cuts_added,cuts_removed,wall_time_ms\n";
  for (const IterationRecord& r : log) {
    out << r.iteration << ',' << format_double(r.master_objective) << ',' << format_double(r.expected_recourse) << ','
        << format_double(r.gap) << ',' << format_double(r.radius) << ',' << r.cuts_added << ',' << r.cuts_removed
        << ',';
    if (with_timings) out << format_double(r.wall_time_ms);
    out << '\n';
  }
}

}  // namespace hydrosp::lshaped

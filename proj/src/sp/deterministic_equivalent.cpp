#include "hydrosp/sp/deterministic_equivalent.hpp"

#include <stdexcept>
#include <thread>

#include "hydrosp/errors.hpp"

namespace hydrosp::sp {

DeterministicEquivalent build_deterministic_equivalent(const FiniteProgram& fp) {
  fp.validate();
  const TwoStageProgram& prog = *fp.program;
  DeterministicEquivalent de;
  de.lp = prog.canonical_first_stage();
  de.first_stage_columns = de.lp.num_columns();
  de.binaries.assign(prog.binaries().begin(), prog.binaries().end());
  double offset = de.lp.objective_offset();

  std::vector<lp::Term> terms;
  for (int s = 0; s < fp.size(); ++s) {
    const Subproblem sub = prog.canonical_subproblem(fp.scenarios[s]);
    const double pi = fp.probabilities[s];
    const lp::LinearProgram& w = sub.recourse;
    const int col0 = de.lp.num_columns();
    de.scenario_column_offset.push_back(col0);
    de.scenario_row_offset.push_back(de.lp.num_rows());
    for (int j = 0; j < w.num_columns(); ++j) {
      de.lp.add_column(pi * w.cost(j), w.lower(j), w.upper(j), w.column_name(j) + "_s" + std::to_string(s));
    }
    offset += pi * w.objective_offset();

    std::vector<std::vector<lp::Term>> tech(w.num_rows());
    for (const TechnologyEntry& e : sub.technology) tech[e.row].push_back({e.column, e.value});
    for (int i = 0; i < w.num_rows(); ++i) {
      terms.clear();
      for (const lp::Term& t : w.row(i)) terms.push_back({col0 + t.column, t.value});
      terms.insert(terms.end(), tech[i].begin(), tech[i].end());
      de.lp.add_row(terms, w.sense(i), w.rhs(i), w.row_name(i) + "_s" + std::to_string(s));
    }
  }
  de.lp.set_objective_offset(offset);
  return de;
}

DeterministicSolution solve_deterministic_equivalent(const FiniteProgram& fp, const lp::MbpOptions& options) {
  const DeterministicEquivalent de = build_deterministic_equivalent(fp);
  lp::LpSolution sol;
  if (de.binaries.empty()) {
    sol = lp::solve_lp(de.lp, options.simplex);
  } else {
    sol = lp::solve_mbp(de.lp, de.binaries, options);
  }
  DeterministicSolution out;
  out.status = sol.status;
  if (!sol.optimal()) return out;
  out.objective = fp.program->sign() * sol.objective;
  out.x.assign(sol.primal.begin(), sol.primal.begin() + de.first_stage_columns);
  for (int s = 0; s < fp.size(); ++s) {
    const int begin = de.scenario_column_offset[s];
    const int end = s + 1 < fp.size() ? de.scenario_column_offset[s + 1] : de.lp.num_columns();
    out.y.emplace_back(sol.primal.begin() + begin, sol.primal.begin() + end);
  }
  return out;
}

Evaluation evaluate_decision(const FiniteProgram& fp, std::span<const double> x, const EvaluateOptions& options) {
  fp.validate();
  const TwoStageProgram& prog = *fp.program;
  if (static_cast<int>(x.size()) != prog.first_stage_size()) {
    throw StructuralError("first-stage vector has " + std::to_string(x.size()) + " entries, expected " +
                          std::to_string(prog.first_stage_size()));
  }
  if (prog.first_stage().max_violation(x) > 1e-8) {
    throw std::invalid_argument("first-stage decision violates its constraints");
  }

  const int n = fp.size();
  std::vector<lp::LpSolution> solutions(n);
  std::vector<int> failure(n, -1);  // -1 ok, 0 infeasible, 1 other
  auto work = [&](int s) {
    const Subproblem sub = prog.canonical_subproblem(fp.scenarios[s]);
    lp::LinearProgram lp = sub.recourse;
    apply_first_stage(sub, x, lp);
    solutions[s] = lp::solve_lp(lp);
    if (solutions[s].status == lp::SolveStatus::kInfeasible) failure[s] = 0;
    else if (!solutions[s].optimal()) failure[s] = 1;
  };
  const int threads = std::max(1, std::min(options.threads, n));
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

  Evaluation ev;
  for (int s = 0; s < n; ++s) {
    if (failure[s] == 0) throw InfeasibleScenarioError(s);
    if (failure[s] == 1) {
      throw NumericalError("recourse solve failed for scenario " + std::to_string(s) + " (" +
                           std::string(lp::to_string(solutions[s].status)) + ")");
    }
  }
  ev.first_stage = prog.first_stage().objective_value(x);
  ev.value = ev.first_stage;
  ev.recourse.resize(n);
  for (int s = 0; s < n; ++s) {
    ev.recourse[s] = prog.sign() * solutions[s].objective;
    ev.value += fp.probabilities[s] * ev.recourse[s];
  }
  if (options.keep_solutions) ev.solutions = std::move(solutions);
  return ev;
}

std::vector<double> solve_expected_value_problem(const FiniteProgram& fp, const lp::MbpOptions& options) {
  fp.validate();
  FiniteProgram ev;
  ev.program = fp.program;
  ev.scenarios.push_back(expected_scenario(fp.scenarios, fp.probabilities));
  ev.probabilities.push_back(1.0);
  DeterministicSolution sol = solve_deterministic_equivalent(ev, options);
  if (!sol.optimal()) {
    throw NumericalError("expected value problem not solved: " + std::string(lp::to_string(sol.status)));
  }
  return sol.x;
}

}  // namespace hydrosp::sp

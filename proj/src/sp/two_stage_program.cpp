#include "hydrosp/sp/two_stage_program.hpp"

#include <cmath>

#include "hydrosp/errors.hpp"

namespace hydrosp::sp {

TwoStageProgram::TwoStageProgram(Sense sense, lp::LinearProgram first_stage, std::vector<int> binaries,
                                 Generator second_stage)
    : sense_(sense), first_stage_(std::move(first_stage)), binaries_(std::move(binaries)),
      generator_(std::move(second_stage)) {
  for (int j : binaries_) {
    if (j < 0 || j >= first_stage_.num_columns()) throw StructuralError("binary index out of range");
  }
  if (!generator_) throw StructuralError("second-stage generator missing");
}

Subproblem TwoStageProgram::subproblem(const ScenarioSample& sample) const {
  Subproblem sub = generator_(sample);
  for (const TechnologyEntry& e : sub.technology) {
    if (e.column < 0 || e.column >= first_stage_size() || e.row < 0 || e.row >= sub.recourse.num_rows()) {
      throw StructuralError("technology entry (" + std::to_string(e.row) + ", " + std::to_string(e.column) +
                            ") outside the " + std::to_string(sub.recourse.num_rows()) + " x " +
                            std::to_string(first_stage_size()) + " technology matrix");
    }
    if (!std::isfinite(e.value)) throw StructuralError("non-finite technology coefficient");
  }
  return sub;
}

lp::LinearProgram TwoStageProgram::canonical_first_stage() const {
  lp::LinearProgram lp = first_stage_;
  if (maximize()) lp.scale_objective(-1.0);
  return lp;
}

Subproblem TwoStageProgram::canonical_subproblem(const ScenarioSample& sample) const {
  Subproblem sub = subproblem(sample);
  if (maximize()) sub.recourse.scale_objective(-1.0);
  return sub;
}

void FiniteProgram::validate() const {
  if (!program) throw StructuralError("finite program without a two-stage program");
  if (scenarios.empty()) throw StructuralError("finite program needs at least one scenario");
  if (probabilities.size() != scenarios.size()) throw StructuralError("one probability per scenario required");
  double total = 0.0;
  for (double p : probabilities) {
    if (!(p >= 0.0)) throw StructuralError("negative scenario probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) throw StructuralError("scenario probabilities do not sum to one");
}

FiniteProgram FiniteProgram::uniform(std::shared_ptr<const TwoStageProgram> program,
                                     std::vector<ScenarioSample> scenarios) {
  FiniteProgram fp;
  fp.program = std::move(program);
  const double p = scenarios.empty() ? 0.0 : 1.0 / static_cast<double>(scenarios.size());
  fp.probabilities.assign(scenarios.size(), p);
  fp.scenarios = std::move(scenarios);
  return fp;
}

void apply_first_stage(const Subproblem& base, std::span<const double> x, lp::LinearProgram& work) {
  for (int i = 0; i < base.recourse.num_rows(); ++i) work.set_rhs(i, base.recourse.rhs(i));
  for (const TechnologyEntry& e : base.technology) work.set_rhs(e.row, work.rhs(e.row) - e.value * x[e.column]);
}

}  // namespace hydrosp::sp

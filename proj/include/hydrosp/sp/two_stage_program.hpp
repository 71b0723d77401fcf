#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "hydrosp/lp/linear_program.hpp"
#include "hydrosp/sp/scenario.hpp"

namespace hydrosp::sp {

enum class Sense { kMinimize, kMaximize };

struct TechnologyEntry {
  int row;     // recourse row
  int column;  // first-stage column
  double value;
};

// Second stage of one scenario:  W y + T x (sense) h  with recourse costs q.
// `recourse` holds q, W, h and the bounds on y; `technology` holds T.
struct Subproblem {
  lp::LinearProgram recourse;
  std::vector<TechnologyEntry> technology;
};

class TwoStageProgram {
 public:
  using Generator = std::function<Subproblem(const ScenarioSample&)>;

  TwoStageProgram(Sense sense, lp::LinearProgram first_stage, std::vector<int> binaries, Generator second_stage);

  Sense sense() const { return sense_; }
  bool maximize() const { return sense_ == Sense::kMaximize; }
  // +1 for minimisation, -1 for maximisation: canonical value = sign * user value.
  double sign() const { return maximize() ? -1.0 : 1.0; }

  const lp::LinearProgram& first_stage() const { return first_stage_; }
  std::span<const int> binaries() const { return binaries_; }
  int first_stage_size() const { return first_stage_.num_columns(); }

  // User-sense second stage for a sample; validates T against the first stage.
  Subproblem subproblem(const ScenarioSample& sample) const;

  // Minimisation forms used by the solvers.
  lp::LinearProgram canonical_first_stage() const;
  Subproblem canonical_subproblem(const ScenarioSample& sample) const;

 private:
  Sense sense_;
  lp::LinearProgram first_stage_;
  std::vector<int> binaries_;
  Generator generator_;
};

struct FiniteProgram {
  std::shared_ptr<const TwoStageProgram> program;
  std::vector<ScenarioSample> scenarios;
  std::vector<double> probabilities;

  int size() const { return static_cast<int>(scenarios.size()); }
  // Throws StructuralError unless probabilities are non-negative and sum to 1.
  void validate() const;

  static FiniteProgram uniform(std::shared_ptr<const TwoStageProgram> program, std::vector<ScenarioSample> scenarios);
};

// Recourse rhs after moving the first stage to the right: h - T x.
void apply_first_stage(const Subproblem& base, std::span<const double> x, lp::LinearProgram& work);

}  // namespace hydrosp::sp

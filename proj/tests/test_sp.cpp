#include <doctest.h>

#include <random>
#include <sstream>

#include "hydrosp/errors.hpp"
#include "hydrosp/lp/simplex.hpp"
#include "hydrosp/sp/deterministic_equivalent.hpp"
#include "hydrosp/sp/scenario_csv.hpp"
#include "support.hpp"

using namespace hydrosp;
using support::scalar_sample;

namespace {

sp::FiniteProgram shortfall_fp() {
  return sp::FiniteProgram::uniform(support::shortfall_program(), {scalar_sample(1.0), scalar_sample(3.0)});
}

// Closed form of x + 0.5 * (max(1 - x, 0) + max(3 - x, 0)).
double shortfall_value(double x) { return x + 0.5 * (std::max(1.0 - x, 0.0) + std::max(3.0 - x, 0.0)); }

}  // namespace

TEST_CASE("single scenario without recourse reproduces the first stage") {
  lp::LinearProgram first;
  first.add_column(2.0, 0.0, 5.0, "a");
  first.add_column(-1.0, 1.0, 3.0, "b");
  first.add_row({{0, 1.0}, {1, 1.0}}, lp::RowSense::kLessEqual, 4.0);
  auto program = std::make_shared<const sp::TwoStageProgram>(sp::Sense::kMinimize, first, std::vector<int>{},
                                                             [](const sp::ScenarioSample&) { return sp::Subproblem{}; });
  const auto de = sp::build_deterministic_equivalent(sp::FiniteProgram::uniform(program, {scalar_sample(0.0)}));
  REQUIRE(de.lp.num_columns() == first.num_columns());
  REQUIRE(de.lp.num_rows() == first.num_rows());
  for (int j = 0; j < first.num_columns(); ++j) {
    CHECK(de.lp.cost(j) == first.cost(j));
    CHECK(de.lp.lower(j) == first.lower(j));
    CHECK(de.lp.upper(j) == first.upper(j));
  }
  CHECK(de.lp.rhs(0) == 4.0);
}

TEST_CASE("shortfall toy matches the grid oracle") {
  const auto sol = sp::solve_deterministic_equivalent(shortfall_fp());
  REQUIRE(sol.optimal());
  double best = 1e300;
  for (int k = 0; k <= 300; ++k) best = std::min(best, shortfall_value(k * 0.01));
  CHECK(sol.objective == doctest::Approx(best).epsilon(1e-12));
  CHECK(sol.objective == doctest::Approx(2.0));
  CHECK(shortfall_value(sol.x[0]) == doctest::Approx(2.0));
}

TEST_CASE("evaluating a fixed decision") {
  const sp::FiniteProgram fp = shortfall_fp();
  const sp::Evaluation ev = sp::evaluate_decision(fp, std::vector<double>{1.0});
  CHECK(ev.first_stage == doctest::Approx(1.0));
  REQUIRE(ev.recourse.size() == 2);
  CHECK(ev.recourse[0] == doctest::Approx(0.0));
  CHECK(ev.recourse[1] == doctest::Approx(2.0));
  CHECK(ev.value == doctest::Approx(2.0));

  const sp::FiniteProgram same = sp::FiniteProgram::uniform(support::shortfall_program(),
                                                           {scalar_sample(3.0), scalar_sample(3.0), scalar_sample(3.0)});
  const sp::FiniteProgram one = sp::FiniteProgram::uniform(support::shortfall_program(), {scalar_sample(3.0)});
  CHECK(sp::evaluate_decision(same, std::vector<double>{0.5}).value ==
        doctest::Approx(sp::evaluate_decision(one, std::vector<double>{0.5}).value).epsilon(1e-15));

  CHECK_THROWS_AS(sp::evaluate_decision(fp, std::vector<double>{11.0}), std::invalid_argument);
  CHECK_THROWS_AS(sp::evaluate_decision(fp, std::vector<double>{1.0, 2.0}), StructuralError);
}

TEST_CASE("an infeasible recourse names its scenario") {
  lp::LinearProgram first;
  first.add_column(0.0, 0.0, 1.0);
  auto gen = [](const sp::ScenarioSample& s) {
    sp::Subproblem sub;
    const int y = sub.recourse.add_column(0.0, 0.0, 1.0);
    sub.recourse.add_row({{y, 1.0}}, lp::RowSense::kGreaterEqual, s.price[0]);
    return sub;
  };
  auto program = std::make_shared<const sp::TwoStageProgram>(sp::Sense::kMinimize, first, std::vector<int>{}, gen);
  const auto fp = sp::FiniteProgram::uniform(program, {scalar_sample(0.5), scalar_sample(0.0), scalar_sample(2.0)});
  try {
    sp::evaluate_decision(fp, std::vector<double>{0.0});
    FAIL("expected an exception");
  } catch (const InfeasibleScenarioError& e) {
    CHECK(e.scenario() == 2);
  }
}

TEST_CASE("technology entries must reference first-stage columns") {
  lp::LinearProgram first;
  first.add_column(0.0, 0.0, 1.0);
  auto gen = [](const sp::ScenarioSample&) {
    sp::Subproblem sub;
    const int y = sub.recourse.add_column(0.0, 0.0, 1.0);
    const int r = sub.recourse.add_row({{y, 1.0}}, lp::RowSense::kLessEqual, 1.0);
    sub.technology.push_back({r, 3, 1.0});
    return sub;
  };
  auto program = std::make_shared<const sp::TwoStageProgram>(sp::Sense::kMinimize, first, std::vector<int>{}, gen);
  CHECK_THROWS_AS(program->subproblem(scalar_sample(0.0)), StructuralError);
  CHECK_THROWS_AS(sp::build_deterministic_equivalent(sp::FiniteProgram::uniform(program, {scalar_sample(0.0)})),
                  StructuralError);
}

TEST_CASE("probabilities are validated") {
  sp::FiniteProgram fp = shortfall_fp();
  fp.probabilities = {0.7, 0.4};
  CHECK_THROWS_AS(fp.validate(), StructuralError);
  fp.probabilities = {1.5, -0.5};
  CHECK_THROWS_AS(fp.validate(), StructuralError);
  fp.probabilities = {0.25, 0.75};
  CHECK_NOTHROW(fp.validate());
}

TEST_CASE("expected scenario is the weighted mean") {
  sp::ScenarioSample a{{10.0, 10.0}, {{1.0, 2.0}}};
  sp::ScenarioSample b{{30.0, 30.0}, {{3.0, 6.0}}};
  const std::vector<sp::ScenarioSample> both{a, b};
  CHECK(sp::expected_scenario(std::vector<sp::ScenarioSample>{a}) == a);
  const sp::ScenarioSample m = sp::expected_scenario(both);
  CHECK(m.price == std::vector<double>{20.0, 20.0});
  CHECK(m.inflow[0] == std::vector<double>{2.0, 4.0});

  sp::ScenarioSample zero{{0.0}, {}}, forty{{40.0}, {}};
  const std::vector<sp::ScenarioSample> pair{zero, forty};
  CHECK(sp::expected_scenario(pair, std::vector<double>{0.25, 0.75}).price[0] == doctest::Approx(30.0));
  CHECK_THROWS_AS(sp::expected_scenario(std::vector<sp::ScenarioSample>{}), std::invalid_argument);
}

TEST_CASE("expected value problem solves the mean scenario") {
  const std::vector<double> x = sp::solve_expected_value_problem(shortfall_fp());
  // Mean scenario h = 2: x + max(2 - x, 0) is flat at 2 on [0, 2].
  REQUIRE(x.size() == 1);
  CHECK(x[0] >= -1e-9);
  CHECK(x[0] <= 2.0 + 1e-9);
  CHECK(x[0] + std::max(2.0 - x[0], 0.0) == doctest::Approx(2.0));

  const sp::FiniteProgram single = sp::FiniteProgram::uniform(support::shortfall_program(), {scalar_sample(3.0)});
  const auto ev = sp::solve_expected_value_problem(single);
  CHECK(sp::evaluate_decision(single, ev).value ==
        doctest::Approx(sp::solve_deterministic_equivalent(single).objective).epsilon(1e-12));
}

TEST_CASE("random programs: evaluation at the optimum and EEV ordering") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    support::RandomShape shape;
    shape.sense = trial % 2 == 0 ? sp::Sense::kMaximize : sp::Sense::kMinimize;
    shape.binaries = trial % 3 == 0 ? 2 : 0;
    const sp::FiniteProgram fp = support::random_program(rng, shape);
    const auto de = sp::solve_deterministic_equivalent(fp);
    REQUIRE(de.optimal());
    const double at_opt = sp::evaluate_decision(fp, de.x).value;
    CHECK(at_opt == doctest::Approx(de.objective).epsilon(1e-8));

    const std::vector<double> x_bar = sp::solve_expected_value_problem(fp);
    const double eev = sp::evaluate_decision(fp, x_bar).value;
    if (fp.program->maximize()) {
      CHECK(eev <= de.objective + 1e-8);
    } else {
      CHECK(eev >= de.objective - 1e-8);
    }
  }
}

TEST_CASE("deterministic equivalent dimensions") {
  std::mt19937_64 rng(5);
  support::RandomShape shape;
  shape.scenarios = 6;
  const sp::FiniteProgram fp = support::random_program(rng, shape);
  const auto de = sp::build_deterministic_equivalent(fp);
  const int n = shape.first, m = shape.recourse + 2 * shape.rows;
  CHECK(de.lp.num_columns() == n + shape.scenarios * m);
  CHECK(de.lp.num_rows() == 1 + shape.scenarios * shape.rows);
  CHECK(de.first_stage_columns == n);
  for (int s = 0; s < shape.scenarios; ++s) CHECK(de.scenario_column_offset[s] == n + s * m);
}

TEST_CASE("parallel evaluation is bit-identical to serial") {
  std::mt19937_64 rng(3);
  support::RandomShape shape;
  shape.scenarios = 17;
  const sp::FiniteProgram fp = support::random_program(rng, shape);
  const std::vector<double> x(shape.first, 0.25);
  sp::EvaluateOptions serial, parallel;
  parallel.threads = 4;
  const auto a = sp::evaluate_decision(fp, x, serial);
  const auto b = sp::evaluate_decision(fp, x, parallel);
  CHECK(a.value == b.value);
  CHECK(a.recourse == b.recourse);
}

TEST_CASE("scenario CSV round trip") {
  sp::ScenarioSet set;
  set.scenarios = {sp::ScenarioSample{{1.5, 2.0 / 3.0}, {{0.1, 0.2}, {3.0, 4.0}}},
                   sp::ScenarioSample{{-1.0, 1e-17}, {{5.0, 6.0}, {7.0, 8.0}}}};
  set.probabilities = {0.25, 0.75};
  std::stringstream buf;
  sp::write_scenarios(buf, set, {"A", "B"});
  const std::string text = buf.str();
  CHECK(text.rfind("scenario_id,period,price,probability,inflow_A,inflow_B\n", 0) == 0);
  const sp::ScenarioSet back = sp::read_scenarios(buf);
  CHECK(back.scenarios == set.scenarios);
  CHECK(back.probabilities == set.probabilities);

  std::istringstream bad("scenario_id,period,price\n0,0,1\n0,2,1\n");
  CHECK_THROWS_AS(sp::read_scenarios(bad), ParseError);
}

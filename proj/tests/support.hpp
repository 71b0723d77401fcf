#pragma once

#include <cmath>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "hydrosp/hydro/resolution.hpp"
#include "hydrosp/hydro/river.hpp"
#include "hydrosp/sp/two_stage_program.hpp"

namespace support {

using namespace hydrosp;

inline std::string data_file(const std::string& name) { return std::string(HYDROSP_DATA_DIR) + "/" + name; }

inline sp::ScenarioSample scalar_sample(double h) { return sp::ScenarioSample{{h}, {}}; }

// min c x + E[y]  s.t.  y >= h - x,  y >= 0,  0 <= x <= 10
inline std::shared_ptr<const sp::TwoStageProgram> shortfall_program(double cost = 1.0) {
  lp::LinearProgram first;
  first.add_column(cost, 0.0, 10.0, "x");
  auto gen = [](const sp::ScenarioSample& s) {
    sp::Subproblem sub;
    const int y = sub.recourse.add_column(1.0, 0.0, lp::kInfinity, "y");
    const int row = sub.recourse.add_row({{y, 1.0}}, lp::RowSense::kGreaterEqual, s.price.at(0));
    sub.technology.push_back({row, 0, 1.0});
    return sub;
  };
  return std::make_shared<const sp::TwoStageProgram>(sp::Sense::kMinimize, std::move(first), std::vector<int>{}, gen);
}

// Q(x) = |x - h| through y+ - y- = x - h.
inline std::shared_ptr<const sp::TwoStageProgram> absolute_program(double lower = -5.0, double upper = 5.0) {
  lp::LinearProgram first;
  first.add_column(0.0, lower, upper, "x");
  auto gen = [](const sp::ScenarioSample& s) {
    sp::Subproblem sub;
    const int p = sub.recourse.add_column(1.0, 0.0, lp::kInfinity);
    const int m = sub.recourse.add_column(1.0, 0.0, lp::kInfinity);
    const int row = sub.recourse.add_row({{p, 1.0}, {m, -1.0}}, lp::RowSense::kEqual, -s.price.at(0));
    sub.technology.push_back({row, 0, -1.0});
    return sub;
  };
  return std::make_shared<const sp::TwoStageProgram>(sp::Sense::kMinimize, std::move(first), std::vector<int>{}, gen);
}

struct RandomShape {
  int first = 3;
  int binaries = 0;  // the first `binaries` first-stage columns are binary
  int recourse = 3;
  int rows = 2;
  int scenarios = 4;
  sp::Sense sense = sp::Sense::kMinimize;
};

// Random two-stage program with complete recourse: every recourse row has
// penalised slacks. Scenario data: price = rhs h, inflow[0] = recourse costs.
inline sp::FiniteProgram random_program(std::mt19937_64& rng, const RandomShape& shape) {
  std::uniform_real_distribution<double> u(-1.0, 1.0), pos(0.1, 2.0), rhs(-3.0, 5.0);
  const double s = shape.sense == sp::Sense::kMinimize ? 1.0 : -1.0;
  lp::LinearProgram first;
  std::vector<int> binaries;
  for (int j = 0; j < shape.first; ++j) {
    const bool binary = j < shape.binaries;
    const int c = first.add_column(s * u(rng), 0.0, binary ? 1.0 : 4.0);
    if (binary) binaries.push_back(c);
  }
  std::vector<lp::Term> terms;
  for (int j = 0; j < shape.first; ++j) terms.push_back({j, pos(rng)});
  first.add_row(terms, lp::RowSense::kLessEqual, 2.0 + shape.first);

  std::vector<std::vector<double>> W(shape.rows, std::vector<double>(shape.recourse));
  std::vector<std::vector<double>> T(shape.rows, std::vector<double>(shape.first));
  for (auto& r : W) for (double& v : r) v = u(rng);
  for (auto& r : T) for (double& v : r) v = u(rng);
  std::vector<double> penalty(shape.rows);
  for (double& p : penalty) p = 3.0 + pos(rng);
  const int rows = shape.rows, recourse = shape.recourse, nfirst = shape.first;
  auto gen = [W, T, penalty, rows, recourse, nfirst, s](const sp::ScenarioSample& smp) {
    sp::Subproblem sub;
    lp::LinearProgram& lp = sub.recourse;
    for (int k = 0; k < recourse; ++k) lp.add_column(s * smp.inflow.at(0).at(k), 0.0, 3.0);
    for (int i = 0; i < rows; ++i) {
      const int plus = lp.add_column(s * penalty[i], 0.0, lp::kInfinity);
      const int minus = lp.add_column(s * penalty[i], 0.0, lp::kInfinity);
      std::vector<lp::Term> row;
      for (int k = 0; k < recourse; ++k) row.push_back({k, W[i][k]});
      row.push_back({plus, 1.0});
      row.push_back({minus, -1.0});
      const int r = lp.add_row(row, lp::RowSense::kEqual, smp.price.at(i));
      for (int j = 0; j < nfirst; ++j) sub.technology.push_back({r, j, T[i][j]});
    }
    return sub;
  };
  auto program = std::make_shared<const sp::TwoStageProgram>(shape.sense, std::move(first), binaries, gen);
  std::vector<sp::ScenarioSample> scenarios;
  for (int n = 0; n < shape.scenarios; ++n) {
    sp::ScenarioSample smp;
    for (int i = 0; i < shape.rows; ++i) smp.price.push_back(rhs(rng));
    smp.inflow.emplace_back();
    for (int k = 0; k < shape.recourse; ++k) smp.inflow[0].push_back(u(rng));
    scenarios.push_back(std::move(smp));
  }
  std::vector<double> probs(shape.scenarios);
  double total = 0.0;
  for (double& p : probs) total += (p = pos(rng));
  for (double& p : probs) p /= total;
  return sp::FiniteProgram{program, std::move(scenarios), std::move(probs)};
}

inline bool close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max(1.0, std::abs(b)); }

// Plants with round numbers for hand-checkable models.
inline hydro::PlantData plant(int id, const std::string& name, double pbar, double qbar, double mbar) {
  hydro::PlantData p;
  p.id = id;
  p.name = name;
  p.capacity_mw = pbar;
  p.max_discharge = qbar;
  p.max_volume = mbar;
  return p;
}

}  // namespace support

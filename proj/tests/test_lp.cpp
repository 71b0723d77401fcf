#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <vector>

#include "hydrosp/lp/branch_and_bound.hpp"
#include "hydrosp/lp/lp_format.hpp"
#include "hydrosp/lp/simplex.hpp"

using namespace hydrosp::lp;

namespace {

// Vertex enumeration over all n-subsets of the constraint/bound hyperplanes.
// Only valid for bounded feasible regions.
struct VertexOracle {
  double best = kInfinity;
  bool feasible = false;
};

VertexOracle enumerate_vertices(const LinearProgram& lp) {
  const int n = lp.num_columns();
  std::vector<Eigen::VectorXd> normals;
  std::vector<double> values;
  for (int i = 0; i < lp.num_rows(); ++i) {
    Eigen::VectorXd a = Eigen::VectorXd::Zero(n);
    for (const Term& t : lp.row(i)) a[t.column] += t.value;
    normals.push_back(a);
    values.push_back(lp.rhs(i));
  }
  for (int j = 0; j < n; ++j) {
    for (double b : {lp.lower(j), lp.upper(j)}) {
      if (!std::isfinite(b)) continue;
      Eigen::VectorXd a = Eigen::VectorXd::Zero(n);
      a[j] = 1.0;
      normals.push_back(a);
      values.push_back(b);
    }
  }
  VertexOracle out;
  const int k = static_cast<int>(normals.size());
  std::vector<int> pick(n);
  std::vector<bool> mask(k, false);
  std::fill(mask.begin(), mask.begin() + std::min(n, k), true);
  if (k < n) return out;
  do {
    Eigen::MatrixXd m(n, n);
    Eigen::VectorXd rhs(n);
    int r = 0;
    for (int i = 0; i < k; ++i) {
      if (!mask[i]) continue;
      m.row(r) = normals[i].transpose();
      rhs[r] = values[i];
      ++r;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
    if (lu.rank() < n) continue;
    Eigen::VectorXd x = lu.solve(rhs);
    std::vector<double> xv(x.data(), x.data() + n);
    if (lp.max_violation(xv) > 1e-9) continue;
    out.feasible = true;
    out.best = std::min(out.best, lp.objective_value(xv));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

LinearProgram random_bounded_lp(std::mt19937_64& rng, int n, int m) {
  std::uniform_real_distribution<double> coef(-3.0, 3.0), ub(1.0, 5.0);
  std::uniform_int_distribution<int> sense(0, 2);
  LinearProgram lp;
  for (int j = 0; j < n; ++j) lp.add_column(coef(rng), 0.0, ub(rng));
  for (int i = 0; i < m; ++i) {
    std::vector<Term> terms;
    for (int j = 0; j < n; ++j) terms.push_back({j, std::round(coef(rng) * 4) / 4});
    const int s = sense(rng);
    lp.add_row(terms, s == 0 ? RowSense::kLessEqual : (s == 1 ? RowSense::kGreaterEqual : RowSense::kEqual),
               std::round(coef(rng) * 4) / 4);
  }
  return lp;
}

}  // namespace

TEST_CASE("lower bound row gives unit dual") {
  LinearProgram lp;
  lp.add_column(1.0, 0.0, kInfinity);
  lp.add_row({{0, 1.0}}, RowSense::kGreaterEqual, 3.0);
  const LpSolution s = solve_lp(lp);
  REQUIRE(s.optimal());
  CHECK(s.primal[0] == doctest::Approx(3.0));
  CHECK(s.dual[0] == doctest::Approx(1.0));
}

TEST_CASE("edge optimum has coupling dual -1") {
  LinearProgram lp;
  lp.add_column(-1.0, 0.0, kInfinity);
  lp.add_column(-1.0, 0.0, kInfinity);
  lp.add_row({{0, 1.0}, {1, 1.0}}, RowSense::kLessEqual, 1.0);
  const LpSolution s = solve_lp(lp);
  REQUIRE(s.optimal());
  CHECK(s.objective == doctest::Approx(-1.0));
  CHECK(s.primal[0] + s.primal[1] == doctest::Approx(1.0));
  CHECK(s.dual[0] == doctest::Approx(-1.0));
}

TEST_CASE("contradictory bounds are infeasible") {
  LinearProgram lp;
  lp.add_column(0.0, -kInfinity, kInfinity);
  lp.add_row({{0, 1.0}}, RowSense::kGreaterEqual, 1.0);
  lp.add_row({{0, 1.0}}, RowSense::kLessEqual, 0.0);
  CHECK(solve_lp(lp).status == SolveStatus::kInfeasible);
}

TEST_CASE("unbounded ray is reported") {
  LinearProgram lp;
  lp.add_column(-1.0, 0.0, kInfinity);
  lp.add_column(0.0, 0.0, kInfinity);
  lp.add_row({{0, 1.0}, {1, -1.0}}, RowSense::kLessEqual, 2.0);
  CHECK(solve_lp(lp).status == SolveStatus::kUnbounded);
}

TEST_CASE("free variables and equality rows") {
  // min |x - 2| written with a free x and an epigraph variable.
  LinearProgram lp;
  const int x = lp.add_column(0.0, -kInfinity, kInfinity);
  const int t = lp.add_column(1.0, -kInfinity, kInfinity);
  lp.add_row({{t, 1.0}, {x, -1.0}}, RowSense::kGreaterEqual, -2.0);
  lp.add_row({{t, 1.0}, {x, 1.0}}, RowSense::kGreaterEqual, 2.0);
  lp.add_row({{x, 1.0}}, RowSense::kEqual, 5.0);
  const LpSolution s = solve_lp(lp);
  REQUIRE(s.optimal());
  CHECK(s.objective == doctest::Approx(3.0));
  CHECK(s.dual[2] == doctest::Approx(1.0));
}

TEST_CASE("random bounded LPs match vertex enumeration") {
  std::mt19937_64 rng(2024);
  int feasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 3;
    const int m = 1 + trial % 4;
    const LinearProgram lp = random_bounded_lp(rng, n, m);
    const VertexOracle oracle = enumerate_vertices(lp);
    const LpSolution s = solve_lp(lp);
    if (!oracle.feasible) {
      CHECK(s.status == SolveStatus::kInfeasible);
      continue;
    }
    ++feasible;
    REQUIRE(s.optimal());
    CHECK(s.objective == doctest::Approx(oracle.best).epsilon(1e-9));
    CHECK(lp.max_violation(s.primal) <= 1e-8);
  }
  CHECK(feasible > 50);
}

TEST_CASE("strong duality and complementary slackness") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const LinearProgram lp = random_bounded_lp(rng, 4, 3);
    const LpSolution s = solve_lp(lp);
    if (!s.optimal()) continue;
    // Dual objective: b^T y + sum of reduced-cost bound terms.
    double dual_obj = 0.0;
    for (int i = 0; i < lp.num_rows(); ++i) dual_obj += lp.rhs(i) * s.dual[i];
    for (int j = 0; j < lp.num_columns(); ++j) {
      const double d = s.reduced_cost[j];
      if (d > 1e-9) dual_obj += d * lp.lower(j);
      else if (d < -1e-9) dual_obj += d * lp.upper(j);
    }
    CHECK(std::abs(dual_obj - s.objective) <= 1e-7 * (1 + std::abs(s.objective)));
    for (int i = 0; i < lp.num_rows(); ++i) {
      const double slack = lp.rhs(i) - s.row_activity[i];
      CHECK(std::abs(slack * s.dual[i]) <= 1e-7);
      if (lp.sense(i) == RowSense::kLessEqual) CHECK(s.dual[i] <= 1e-9);
      if (lp.sense(i) == RowSense::kGreaterEqual) CHECK(s.dual[i] >= -1e-9);
    }
  }
}

TEST_CASE("duals are subgradients of the rhs perturbation") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> small(-1e-3, 1e-3);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 60; ++trial) {
    LinearProgram lp = random_bounded_lp(rng, 4, 3);
    const LpSolution base = solve_lp(lp);
    if (!base.optimal()) continue;
    std::vector<double> delta(lp.num_rows());
    for (int i = 0; i < lp.num_rows(); ++i) {
      delta[i] = small(rng);
      lp.set_rhs(i, lp.rhs(i) + delta[i]);
    }
    const LpSolution moved = solve_lp(lp);
    if (!moved.optimal()) continue;
    double predicted = base.objective;
    for (int i = 0; i < lp.num_rows(); ++i) predicted += base.dual[i] * delta[i];
    CHECK(moved.objective >= predicted - 1e-9);
    ++checked;
  }
  CHECK(checked >= 30);
}

TEST_CASE("warm start reproduces the optimum in few pivots") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    LinearProgram lp = random_bounded_lp(rng, 5, 4);
    const LpSolution cold = solve_lp(lp);
    if (!cold.optimal()) continue;
    const LpSolution warm = solve_lp(lp, {}, &cold.basis);
    REQUIRE(warm.optimal());
    CHECK(warm.objective == doctest::Approx(cold.objective).epsilon(1e-10));
    CHECK(warm.iterations == 0);
  }
}

TEST_CASE("degenerate transportation problem") {
  // 3x3 assignment: heavy degeneracy, known optimum 1+1+1 on the diagonal.
  LinearProgram lp;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) lp.add_column(i == j ? 1.0 : 5.0 + i + j, 0.0, kInfinity);
  for (int i = 0; i < 3; ++i) lp.add_row({{3 * i, 1.0}, {3 * i + 1, 1.0}, {3 * i + 2, 1.0}}, RowSense::kEqual, 1.0);
  for (int j = 0; j < 3; ++j) lp.add_row({{j, 1.0}, {3 + j, 1.0}, {6 + j, 1.0}}, RowSense::kEqual, 1.0);
  const LpSolution s = solve_lp(lp);
  REQUIRE(s.optimal());
  CHECK(s.objective == doctest::Approx(3.0));
}

TEST_CASE("binary knapsack-like problem") {
  LinearProgram lp;
  lp.add_column(-1.0, 0.0, 1.0);
  lp.add_column(-1.0, 0.0, 1.0);
  lp.add_row({{0, 1.0}, {1, 1.0}}, RowSense::kLessEqual, 1.5);
  const std::vector<int> bin{0, 1};
  const MbpSolution s = solve_mbp(lp, bin);
  REQUIRE(s.optimal());
  CHECK(s.objective == doctest::Approx(-1.0));
}

TEST_CASE("integral relaxation needs no branching") {
  LinearProgram lp;
  lp.add_column(-2.0, 0.0, 1.0);
  lp.add_column(1.0, 0.0, 1.0);
  lp.add_row({{0, 1.0}, {1, 1.0}}, RowSense::kLessEqual, 1.0);
  const std::vector<int> bin{0, 1};
  const MbpSolution s = solve_mbp(lp, bin);
  const LpSolution r = solve_lp(lp);
  REQUIRE(s.optimal());
  CHECK(s.objective == doctest::Approx(r.objective));
  CHECK(s.nodes == 1);
}

TEST_CASE("branch and bound equals enumeration on small mixed problems") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  for (int trial = 0; trial < 60; ++trial) {
    const int nb = 3 + trial % 6;  // up to 8 binaries
    LinearProgram lp;
    std::vector<int> bin;
    for (int j = 0; j < nb; ++j) bin.push_back(lp.add_column(coef(rng), 0.0, 1.0));
    const int y = lp.add_column(coef(rng), 0.0, 4.0);
    for (int i = 0; i < 3; ++i) {
      std::vector<Term> terms;
      for (int j = 0; j < nb; ++j) terms.push_back({j, coef(rng)});
      terms.push_back({y, coef(rng)});
      lp.add_row(terms, RowSense::kLessEqual, std::abs(coef(rng)) + 0.5);
    }
    double best = kInfinity;
    for (int mask = 0; mask < (1 << nb); ++mask) {
      LinearProgram fixed = lp;
      for (int j = 0; j < nb; ++j) {
        const double v = (mask >> j) & 1;
        fixed.set_bounds(j, v, v);
      }
      // One continuous variable left: scan its feasible interval directly.
      double lo = 0.0, hi = 4.0;
      for (int i = 0; i < fixed.num_rows(); ++i) {
        double rest = 0.0, a = 0.0;
        for (const Term& t : fixed.row(i)) {
          if (t.column == y) a = t.value;
          else rest += t.value * ((mask >> t.column) & 1);
        }
        const double cap = fixed.rhs(i) - rest;
        if (a > 0) hi = std::min(hi, cap / a);
        else if (a < 0) lo = std::max(lo, cap / a);
        else if (cap < 0) lo = kInfinity;
      }
      if (lo > hi) continue;
      double v = 0.0;
      for (int j = 0; j < nb; ++j) v += lp.cost(j) * ((mask >> j) & 1);
      v += std::min(lp.cost(y) * lo, lp.cost(y) * hi);
      best = std::min(best, v);
    }
    const MbpSolution s = solve_mbp(lp, bin);
    if (!std::isfinite(best)) {
      CHECK(s.status == SolveStatus::kInfeasible);
      continue;
    }
    REQUIRE(s.optimal());
    CHECK(s.objective == doctest::Approx(best).epsilon(1e-9));
  }
}

TEST_CASE("node limit keeps the incumbent") {
  LinearProgram lp;
  std::vector<int> bin;
  for (int j = 0; j < 10; ++j) bin.push_back(lp.add_column(-1.0 - 0.01 * j, 0.0, 1.0));
  std::vector<Term> terms;
  for (int j = 0; j < 10; ++j) terms.push_back({j, 2.0});
  lp.add_row(terms, RowSense::kLessEqual, 9.0);
  MbpOptions opt;
  opt.node_limit = 3;
  const MbpSolution s = solve_mbp(lp, bin, opt);
  CHECK(s.status == SolveStatus::kNodeLimit);
}

TEST_CASE("LP text dump lists every section") {
  LinearProgram lp;
  lp.add_column(1.5, 0.0, 1.0, "open");
  lp.add_column(-2.0, -kInfinity, kInfinity, "flow");
  lp.add_row({{0, 1.0}, {1, -1.0}}, RowSense::kGreaterEqual, 0.5, "link");
  const std::vector<int> bin{0};
  const std::string text = to_lp_format(lp, bin);
  CHECK(text.find("Minimize\n obj: + 1.5 x0_open - 2 x1_flow") != std::string::npos);
  CHECK(text.find("c0_link: + 1 x0_open - 1 x1_flow >= 0.5") != std::string::npos);
  CHECK(text.find("x1_flow free") != std::string::npos);
  CHECK(text.find("Binaries\n x0_open\n") != std::string::npos);
  CHECK(text.substr(text.size() - 4) == "End\n");
}

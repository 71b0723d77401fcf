#include "hydrosp/lp/branch_and_bound.hpp"

#include <cmath>
#include <queue>
#include <utility>
#include <vector>

#include "hydrosp/errors.hpp"

namespace hydrosp::lp {

namespace {

struct Node {
  double bound;
  long id;
  std::vector<std::pair<int, double>> fixings;
  Basis basis;
};

struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    return a.id > b.id;
  }
};

}  // namespace

MbpSolution solve_mbp(const LinearProgram& lp, std::span<const int> binaries, const MbpOptions& options) {
  for (int j : binaries) {
    if (j < 0 || j >= lp.num_columns() || lp.lower(j) < 0.0 || lp.upper(j) > 1.0) {
      throw StructuralError("binary column " + std::to_string(j) + " must have bounds within [0,1]");
    }
  }
  const double itol = kTolerances.integrality;
  LinearProgram work = lp;
  MbpSolution best;
  best.status = SolveStatus::kInfeasible;
  double incumbent = kInfinity;

  auto apply = [&](const std::vector<std::pair<int, double>>& fixings) {
    for (int j : binaries) work.set_bounds(j, lp.lower(j), lp.upper(j));
    for (const auto& [j, v] : fixings) work.set_bounds(j, v, v);
  };

  std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
  long next_id = 0;
  open.push(Node{-kInfinity, next_id++, {}, {}});
  long nodes = 0;

  while (!open.empty()) {
    Node node = open.top();
    open.pop();
    if (node.bound >= incumbent - options.prune_tolerance) continue;
    if (nodes >= options.node_limit) {
      best.status = SolveStatus::kNodeLimit;
      best.nodes = nodes;
      return best;
    }
    ++nodes;
    apply(node.fixings);
    LpSolution relax = solve_lp(work, options.simplex, node.basis.empty() ? nullptr : &node.basis);
    if (relax.status == SolveStatus::kInfeasible) continue;
    if (relax.status == SolveStatus::kUnbounded) {
      best.status = SolveStatus::kUnbounded;
      best.nodes = nodes;
      return best;
    }
    if (!relax.optimal()) {
      best.status = relax.status;
      best.nodes = nodes;
      return best;
    }
    if (relax.objective >= incumbent - options.prune_tolerance) continue;

    int branch = -1;
    double most = itol;
    for (int j : binaries) {
      const double v = relax.primal[j];
      const double frac = std::min(v - std::floor(v), std::ceil(v) - v);
      if (frac > most) {
        most = frac;
        branch = j;
      }
    }
    if (branch < 0) {
      // Integral: re-solve with binaries pinned to clean values.
      std::vector<std::pair<int, double>> fixed;
      fixed.reserve(binaries.size());
      for (int j : binaries) fixed.emplace_back(j, std::round(relax.primal[j]));
      apply(fixed);
      LpSolution exact = solve_lp(work, options.simplex, &relax.basis);
      if (!exact.optimal()) continue;
      for (const auto& [j, v] : fixed) exact.primal[j] = v;
      if (exact.objective < incumbent) {
        incumbent = exact.objective;
        static_cast<LpSolution&>(best) = std::move(exact);
        best.has_incumbent = true;
      }
      continue;
    }
    for (double value : {0.0, 1.0}) {
      Node child{relax.objective, next_id++, node.fixings, relax.basis};
      child.fixings.emplace_back(branch, value);
      open.push(std::move(child));
    }
  }
  best.nodes = nodes;
  if (best.has_incumbent) best.status = SolveStatus::kOptimal;
  return best;
}

}  // namespace hydrosp::lp

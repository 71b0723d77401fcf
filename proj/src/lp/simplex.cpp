#include "hydrosp/lp/simplex.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <utility>

namespace hydrosp::lp {

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kUnbounded: return "unbounded";
    case SolveStatus::kIterationLimit: return "iteration_limit";
    case SolveStatus::kNodeLimit: return "node_limit";
    case SolveStatus::kNumericalFailure: return "numerical_failure";
  }
  return "unknown";
}

namespace {

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::ColMajor, int>;
using Vector = Eigen::VectorXd;

constexpr double kPivotTolerance = 1e-9;
constexpr double kDegenerateStep = 1e-12;

// Columns 0..n-1 are structurals; column n+i is the logical r_i of row i in
//   A x - r = 0,  rl_i <= r_i <= ru_i.
class RevisedSimplex {
 public:
  RevisedSimplex(const LinearProgram& lp, const SimplexOptions& options)
      : lp_(lp), options_(options), n_(lp.num_columns()), m_(lp.num_rows()), total_(n_ + m_) {
    build_columns();
    cost_.assign(total_, 0.0);
    lower_.resize(total_);
    upper_.resize(total_);
    for (int j = 0; j < n_; ++j) {
      cost_[j] = lp.cost(j);
      lower_[j] = lp.lower(j);
      upper_[j] = lp.upper(j);
    }
    for (int i = 0; i < m_; ++i) {
      const double b = lp.rhs(i);
      switch (lp.sense(i)) {
        case RowSense::kLessEqual: lower_[n_ + i] = -kInfinity; upper_[n_ + i] = b; break;
        case RowSense::kGreaterEqual: lower_[n_ + i] = b; upper_[n_ + i] = kInfinity; break;
        case RowSense::kEqual: lower_[n_ + i] = b; upper_[n_ + i] = b; break;
      }
    }
  }

  LpSolution run(const Basis* warm) {
    LpSolution result;
    if (warm && try_warm_start(*warm)) {
      // A warm basis usually stays dual feasible after bound or row changes.
      if (max_basic_infeasibility() > options_.primal_tolerance && make_dual_feasible()) {
        if (dual_iterate() == SolveStatus::kNumericalFailure) cold_start();
      }
    } else {
      cold_start();
    }
    result.status = iterate();
    result.iterations = iterations_;
    if (result.status == SolveStatus::kNumericalFailure) {
      // A singular basis mid-run: retry once from the logical basis.
      cold_start();
      result.status = iterate();
      result.iterations = iterations_;
    }
    if (result.status == SolveStatus::kOptimal) fill_solution(result);
    result.basis = export_basis();
    return result;
  }

 private:
  void build_columns() {
    // Duplicate (row, column) entries are summed.
    std::vector<std::vector<std::pair<int, double>>> cols(n_);
    for (int i = 0; i < m_; ++i) {
      for (const Term& t : lp_.row(i)) cols[t.column].emplace_back(i, t.value);
    }
    col_start_.assign(n_ + 1, 0);
    for (int j = 0; j < n_; ++j) {
      auto& c = cols[j];
      std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (!col_row_.empty() && static_cast<int>(col_row_.size()) > col_start_[j] &&
            col_row_.back() == c[k].first) {
          col_val_.back() += c[k].second;
        } else {
          col_row_.push_back(c[k].first);
          col_val_.push_back(c[k].second);
        }
      }
      col_start_[j + 1] = static_cast<int>(col_row_.size());
    }
    pricing_weight_.assign(total_, 1.0 / std::sqrt(2.0));
    for (int j = 0; j < n_; ++j) {
      double norm = 1.0;
      for (int k = col_start_[j]; k < col_start_[j + 1]; ++k) norm += col_val_[k] * col_val_[k];
      pricing_weight_[j] = 1.0 / std::sqrt(norm);
    }
  }

  template <typename F>
  void for_column(int j, F&& f) const {
    if (j < n_) {
      for (int k = col_start_[j]; k < col_start_[j + 1]; ++k) f(col_row_[k], col_val_[k]);
    } else {
      f(j - n_, -1.0);
    }
  }

  double nonbasic_value(int j, VarStatus s) const {
    switch (s) {
      case VarStatus::kAtLower: return lower_[j];
      case VarStatus::kAtUpper: return upper_[j];
      default: return 0.0;
    }
  }

  VarStatus default_status(int j) const {
    if (std::isfinite(lower_[j])) return VarStatus::kAtLower;
    if (std::isfinite(upper_[j])) return VarStatus::kAtUpper;
    return VarStatus::kFreeZero;
  }

  void cold_start() {
    status_.assign(total_, VarStatus::kBasic);
    x_.assign(total_, 0.0);
    head_.resize(m_);
    position_.assign(total_, -1);
    for (int j = 0; j < n_; ++j) {
      status_[j] = default_status(j);
      x_[j] = nonbasic_value(j, status_[j]);
    }
    for (int i = 0; i < m_; ++i) {
      head_[i] = n_ + i;
      position_[n_ + i] = i;
    }
    refactor();
    compute_basic_values();
  }

  bool try_warm_start(const Basis& basis) {
    if (static_cast<int>(basis.columns.size()) != n_ || static_cast<int>(basis.rows.size()) != m_) return false;
    status_.assign(total_, VarStatus::kBasic);
    x_.assign(total_, 0.0);
    position_.assign(total_, -1);
    head_.clear();
    for (int j = 0; j < total_; ++j) {
      VarStatus s = j < n_ ? basis.columns[j] : basis.rows[j - n_];
      if (s == VarStatus::kBasic) {
        position_[j] = static_cast<int>(head_.size());
        head_.push_back(j);
      } else {
        if ((s == VarStatus::kAtLower && !std::isfinite(lower_[j])) ||
            (s == VarStatus::kAtUpper && !std::isfinite(upper_[j])) ||
            (s == VarStatus::kFreeZero && (std::isfinite(lower_[j]) || std::isfinite(upper_[j])))) {
          s = default_status(j);
        }
        x_[j] = nonbasic_value(j, s);
      }
      status_[j] = s;
    }
    if (static_cast<int>(head_.size()) != m_) return false;
    if (!refactor()) return false;
    compute_basic_values();
    return true;
  }

  bool refactor() {
    etas_.clear();
    if (m_ == 0) return true;
    std::vector<Eigen::Triplet<double>> triplets;
    for (int p = 0; p < m_; ++p) {
      for_column(head_[p], [&](int row, double v) { triplets.emplace_back(row, p, v); });
    }
    SparseMatrix basis(m_, m_);
    basis.setFromTriplets(triplets.begin(), triplets.end());
    basis.makeCompressed();
    lu_.analyzePattern(basis);
    lu_.factorize(basis);
    return lu_.info() == Eigen::Success;
  }

  void ftran(Vector& v) const {
    if (m_ == 0) return;
    v = lu_.solve(v).eval();
    for (const Eta& eta : etas_) {
      const double wp = v[eta.row] / eta.pivot;
      if (wp != 0.0) {
        for (const auto& [i, a] : eta.entries) v[i] -= a * wp;
      }
      v[eta.row] = wp;
    }
  }

  void btran(Vector& v) const {
    if (m_ == 0) return;
    for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
      double s = v[it->row];
      for (const auto& [i, a] : it->entries) s -= a * v[i];
      v[it->row] = s / it->pivot;
    }
    v = lu_.transpose().solve(v).eval();
  }

  void compute_basic_values() {
    Vector v = Vector::Zero(m_);
    for (int j = 0; j < total_; ++j) {
      if (status_[j] == VarStatus::kBasic || x_[j] == 0.0) continue;
      const double xj = x_[j];
      for_column(j, [&](int row, double a) { v[row] -= a * xj; });
    }
    ftran(v);
    for (int p = 0; p < m_; ++p) x_[head_[p]] = v[p];
  }

  // Basic variable bounds as seen by the ratio test. In phase 1 an infeasible
  // basic may only travel back to the bound it violates.
  void effective_bounds(int k, bool phase1, double& lo, double& hi) const {
    lo = lower_[k];
    hi = upper_[k];
    if (!phase1) return;
    const double tol = options_.primal_tolerance;
    if (x_[k] < lo - tol) {
      hi = lo;
      lo = -kInfinity;
    } else if (x_[k] > hi + tol) {
      lo = hi;
      hi = kInfinity;
    }
  }

  double infeasibility(int k) const {
    return std::max({0.0, lower_[k] - x_[k], x_[k] - upper_[k]});
  }

  double max_basic_infeasibility() const {
    double worst = 0.0;
    for (int p = 0; p < m_; ++p) worst = std::max(worst, infeasibility(head_[p]));
    return worst;
  }

  void basic_costs(bool phase1, Vector& cb) const {
    cb.resize(m_);
    const double tol = options_.primal_tolerance;
    for (int p = 0; p < m_; ++p) {
      const int k = head_[p];
      if (phase1) {
        cb[p] = x_[k] < lower_[k] - tol ? -1.0 : (x_[k] > upper_[k] + tol ? 1.0 : 0.0);
      } else {
        cb[p] = cost_[k];
      }
    }
  }

  double reduced_cost(int j, bool phase1, const Vector& y) const {
    double d = phase1 ? 0.0 : cost_[j];
    for_column(j, [&](int row, double a) { d -= y[row] * a; });
    return d;
  }

  // Returns the entering column (or -1) and its direction of travel.
  int price(bool phase1, bool bland, const Vector& y, int& direction) const {
    const double tol = options_.dual_tolerance;
    int best = -1;
    double best_score = 0.0;
    for (int j = 0; j < total_; ++j) {
      const VarStatus s = status_[j];
      if (s == VarStatus::kBasic) continue;
      if (s != VarStatus::kFreeZero && lower_[j] == upper_[j]) continue;
      const double d = reduced_cost(j, phase1, y);
      int dir = 0;
      if (s == VarStatus::kAtLower && d < -tol) dir = 1;
      else if (s == VarStatus::kAtUpper && d > tol) dir = -1;
      else if (s == VarStatus::kFreeZero && std::abs(d) > tol) dir = d < 0 ? 1 : -1;
      if (dir == 0) continue;
      if (bland) {
        direction = dir;
        return j;
      }
      const double score = std::abs(d) * pricing_weight_[j];
      if (score > best_score) {
        best_score = score;
        best = j;
        direction = dir;
      }
    }
    return best;
  }

  void reduced_costs(Vector& y) {
    Vector cb;
    basic_costs(false, cb);
    y = cb;
    btran(y);
    d_.assign(total_, 0.0);
    for (int j = 0; j < total_; ++j) {
      if (status_[j] != VarStatus::kBasic) d_[j] = reduced_cost(j, false, y);
    }
  }

  // Moves boxed nonbasics to the bound their reduced cost prefers. Fails when
  // a variable with an infinite bound has the wrong sign.
  bool make_dual_feasible() {
    Vector y;
    reduced_costs(y);
    const double tol = options_.dual_tolerance;
    bool moved = false;
    for (int j = 0; j < total_; ++j) {
      const VarStatus s = status_[j];
      if (s == VarStatus::kBasic || lower_[j] == upper_[j]) continue;
      const double d = d_[j];
      if (s == VarStatus::kAtLower && d < -tol) {
        if (!std::isfinite(upper_[j])) return false;
        status_[j] = VarStatus::kAtUpper;
      } else if (s == VarStatus::kAtUpper && d > tol) {
        if (!std::isfinite(lower_[j])) return false;
        status_[j] = VarStatus::kAtLower;
      } else if (s == VarStatus::kFreeZero && std::abs(d) > tol) {
        return false;
      } else {
        continue;
      }
      x_[j] = nonbasic_value(j, status_[j]);
      moved = true;
    }
    if (moved) compute_basic_values();
    return true;
  }

  // Bounded dual simplex from a dual feasible basis. Returns kOptimal once the
  // basis is primal feasible; kInfeasible or kIterationLimit leave the rest to
  // the primal method.
  SolveStatus dual_iterate() {
    const double ptol = options_.primal_tolerance;
    const double dtol = options_.dual_tolerance;
    Vector rho, alpha, y;
    std::vector<double> row(total_, 0.0);
    int degenerate_run = 0;
    const long limit = iterations_ + 20L * (m_ + n_) + 1000;
    while (true) {
      if (iterations_ >= options_.max_iterations || iterations_ >= limit) return SolveStatus::kIterationLimit;
      int r = -1;
      double worst = ptol;
      for (int p = 0; p < m_; ++p) {
        const double v = infeasibility(head_[p]);
        if (v > worst) {
          worst = v;
          r = p;
        }
      }
      if (r < 0) return SolveStatus::kOptimal;
      const int leaving = head_[r];
      const bool below = x_[leaving] < lower_[leaving];
      const double target = below ? lower_[leaving] : upper_[leaving];
      const double sgn = below ? 1.0 : -1.0;

      rho = Vector::Zero(m_);
      rho[r] = 1.0;
      btran(rho);

      // Harris two-pass dual ratio test over the pivot row.
      double relaxed = kInfinity;
      for (int j = 0; j < total_; ++j) {
        row[j] = 0.0;
        const VarStatus s = status_[j];
        if (s == VarStatus::kBasic || lower_[j] == upper_[j]) continue;
        double a = 0.0;
        for_column(j, [&](int i, double v) { a += rho[i] * v; });
        row[j] = a;
        const double sa = sgn * a;
        if (std::abs(a) <= kPivotTolerance) continue;
        const bool eligible = (s == VarStatus::kAtLower && sa < 0) || (s == VarStatus::kAtUpper && sa > 0) ||
                              s == VarStatus::kFreeZero;
        if (eligible) relaxed = std::min(relaxed, (std::abs(d_[j]) + dtol) / std::abs(a));
      }
      if (!std::isfinite(relaxed)) return SolveStatus::kInfeasible;
      int q = -1;
      double best_pivot = 0.0;
      for (int j = 0; j < total_; ++j) {
        const double a = row[j];
        if (std::abs(a) <= kPivotTolerance) continue;
        const VarStatus s = status_[j];
        const double sa = sgn * a;
        const bool eligible = (s == VarStatus::kAtLower && sa < 0) || (s == VarStatus::kAtUpper && sa > 0) ||
                              s == VarStatus::kFreeZero;
        if (eligible && std::abs(d_[j]) / std::abs(a) <= relaxed && std::abs(a) > best_pivot) {
          best_pivot = std::abs(a);
          q = j;
        }
      }
      if (q < 0) return SolveStatus::kInfeasible;

      alpha = Vector::Zero(m_);
      for_column(q, [&](int i, double v) { alpha[i] = v; });
      ftran(alpha);
      if (std::abs(alpha[r] - row[q]) > 1e-7 * (1.0 + std::abs(row[q]))) {
        // Row and column disagree: refresh the factorization and retry.
        if (!etas_.empty()) {
          if (!refactor()) return SolveStatus::kNumericalFailure;
          compute_basic_values();
          reduced_costs(y);
          continue;
        }
        return SolveStatus::kNumericalFailure;
      }
      ++iterations_;

      const double theta = -d_[q] / row[q];
      if (std::abs(theta) <= kDegenerateStep) {
        if (++degenerate_run > 10 * options_.stall_threshold) return SolveStatus::kIterationLimit;
      } else {
        degenerate_run = 0;
      }
      for (int j = 0; j < total_; ++j) {
        if (row[j] != 0.0 && status_[j] != VarStatus::kBasic) d_[j] += theta * row[j];
      }
      d_[q] = 0.0;
      d_[leaving] = theta;

      const double step = (x_[leaving] - target) / alpha[r];
      x_[q] += step;
      for (int p = 0; p < m_; ++p) {
        if (alpha[p] != 0.0) x_[head_[p]] -= step * alpha[p];
      }
      x_[leaving] = target;
      status_[leaving] = below || lower_[leaving] == upper_[leaving] ? VarStatus::kAtLower : VarStatus::kAtUpper;
      position_[leaving] = -1;
      head_[r] = q;
      position_[q] = r;
      status_[q] = VarStatus::kBasic;
      push_eta(r, alpha);

      if (static_cast<int>(etas_.size()) >= options_.refactor_interval) {
        if (!refactor()) return SolveStatus::kNumericalFailure;
        compute_basic_values();
        reduced_costs(y);
      }
    }
  }

  struct RatioResult {
    bool unbounded = false;
    bool flip = false;
    int row = -1;
    double step = 0.0;
    double target = 0.0;  // value the leaving variable lands on
  };

  RatioResult ratio_test(int q, int dir, const Vector& alpha, bool phase1, bool bland) const {
    RatioResult out;
    const double tol = options_.primal_tolerance;
    const double range = upper_[q] - lower_[q];
    double lo, hi;

    if (bland) {
      double best = kInfinity;
      for (int p = 0; p < m_; ++p) {
        if (std::abs(alpha[p]) <= kPivotTolerance) continue;
        const int k = head_[p];
        const double delta = -dir * alpha[p];
        effective_bounds(k, phase1, lo, hi);
        double r = kInfinity;
        if (delta < 0 && std::isfinite(lo)) r = std::max(0.0, (x_[k] - lo) / -delta);
        if (delta > 0 && std::isfinite(hi)) r = std::max(0.0, (hi - x_[k]) / delta);
        if (r < best - kDegenerateStep || (r <= best + kDegenerateStep && out.row >= 0 && k < head_[out.row])) {
          if (r < best) best = r;
          out.row = p;
          out.target = delta < 0 ? lo : hi;
        }
      }
      if (std::isfinite(range) && range <= best) {
        out.flip = true;
        out.row = -1;
        out.step = range;
        return out;
      }
      if (out.row < 0) {
        out.unbounded = true;
        return out;
      }
      out.step = best;
      return out;
    }

    // Harris two-pass ratio test.
    double relaxed = kInfinity;
    for (int p = 0; p < m_; ++p) {
      if (std::abs(alpha[p]) <= kPivotTolerance) continue;
      const int k = head_[p];
      const double delta = -dir * alpha[p];
      effective_bounds(k, phase1, lo, hi);
      if (delta < 0 && std::isfinite(lo)) relaxed = std::min(relaxed, (x_[k] - lo + tol) / -delta);
      if (delta > 0 && std::isfinite(hi)) relaxed = std::min(relaxed, (hi - x_[k] + tol) / delta);
    }
    if (std::isfinite(range) && range <= relaxed) {
      out.flip = true;
      out.step = range;
      return out;
    }
    if (!std::isfinite(relaxed)) {
      out.unbounded = true;
      return out;
    }
    double best_pivot = 0.0;
    for (int p = 0; p < m_; ++p) {
      if (std::abs(alpha[p]) <= kPivotTolerance) continue;
      const int k = head_[p];
      const double delta = -dir * alpha[p];
      effective_bounds(k, phase1, lo, hi);
      double r = kInfinity;
      if (delta < 0 && std::isfinite(lo)) r = (x_[k] - lo) / -delta;
      if (delta > 0 && std::isfinite(hi)) r = (hi - x_[k]) / delta;
      if (r <= relaxed && std::abs(alpha[p]) > best_pivot) {
        best_pivot = std::abs(alpha[p]);
        out.row = p;
        out.step = std::max(0.0, r);
        out.target = delta < 0 ? lo : hi;
      }
    }
    if (out.row < 0) out.unbounded = true;
    return out;
  }

  void push_eta(int row, const Vector& alpha) {
    Eta eta;
    eta.row = row;
    eta.pivot = alpha[row];
    for (int p = 0; p < m_; ++p) {
      if (p != row && alpha[p] != 0.0) eta.entries.emplace_back(p, alpha[p]);
    }
    etas_.push_back(std::move(eta));
  }

  SolveStatus iterate() {
    Vector cb, y, alpha;
    int degenerate_run = 0;
    bool bland = false;
    bool verified = false;
    int verify_rounds = 0;
    while (true) {
      if (iterations_ >= options_.max_iterations) return SolveStatus::kIterationLimit;
      const bool phase1 = max_basic_infeasibility() > options_.primal_tolerance;

      basic_costs(phase1, cb);
      y = cb;
      btran(y);
      int dir = 0;
      const int q = price(phase1, bland, y, dir);

      if (q < 0) {
        // No improving column. Confirm against a fresh factorization before
        // declaring the outcome.
        if (!verified) {
          if (!refactor()) return SolveStatus::kNumericalFailure;
          compute_basic_values();
          verified = true;
          if (++verify_rounds > 50) return SolveStatus::kNumericalFailure;
          continue;
        }
        if (phase1) {
          double total = 0.0;
          for (int p = 0; p < m_; ++p) total += infeasibility(head_[p]);
          if (total > 1e-7) return SolveStatus::kInfeasible;
          // Residual infeasibility below the contract tolerance: accept.
          return SolveStatus::kOptimal;
        }
        return SolveStatus::kOptimal;
      }
      verified = false;

      alpha = Vector::Zero(m_);
      for_column(q, [&](int row, double a) { alpha[row] = a; });
      ftran(alpha);

      const RatioResult ratio = ratio_test(q, dir, alpha, phase1, bland);
      if (ratio.unbounded) {
        if (phase1) return SolveStatus::kNumericalFailure;
        return SolveStatus::kUnbounded;
      }
      ++iterations_;

      const double step = ratio.step;
      if (step > kDegenerateStep) {
        degenerate_run = 0;
        bland = false;
      } else if (++degenerate_run > options_.stall_threshold) {
        bland = true;
      }

      if (step != 0.0) {
        x_[q] += dir * step;
        for (int p = 0; p < m_; ++p) {
          if (alpha[p] != 0.0) x_[head_[p]] -= dir * step * alpha[p];
        }
      }
      if (ratio.flip) {
        status_[q] = dir > 0 ? VarStatus::kAtUpper : VarStatus::kAtLower;
        x_[q] = nonbasic_value(q, status_[q]);
        continue;
      }

      const int r = ratio.row;
      const int leaving = head_[r];
      const double target = ratio.target;
      x_[leaving] = target;
      if (lower_[leaving] == upper_[leaving] || target == lower_[leaving]) {
        status_[leaving] = VarStatus::kAtLower;
      } else {
        status_[leaving] = VarStatus::kAtUpper;
      }
      position_[leaving] = -1;
      head_[r] = q;
      position_[q] = r;
      status_[q] = VarStatus::kBasic;
      push_eta(r, alpha);

      if (static_cast<int>(etas_.size()) >= options_.refactor_interval) {
        if (!refactor()) return SolveStatus::kNumericalFailure;
        compute_basic_values();
      }
    }
  }

  void fill_solution(LpSolution& out) {
    out.primal.assign(x_.begin(), x_.begin() + n_);
    for (int j = 0; j < n_; ++j) {
      if (status_[j] != VarStatus::kBasic) out.primal[j] = nonbasic_value(j, status_[j]);
    }
    Vector cb;
    basic_costs(false, cb);
    Vector y = cb;
    btran(y);
    out.dual.assign(y.data(), y.data() + m_);
    out.reduced_cost.resize(n_);
    for (int j = 0; j < n_; ++j) out.reduced_cost[j] = status_[j] == VarStatus::kBasic ? 0.0 : reduced_cost(j, false, y);
    out.row_activity.resize(m_);
    for (int i = 0; i < m_; ++i) out.row_activity[i] = lp_.row_activity(i, out.primal);
    out.objective = lp_.objective_value(out.primal);
  }

  Basis export_basis() const {
    Basis b;
    if (status_.size() != static_cast<std::size_t>(total_)) return b;
    b.columns.assign(status_.begin(), status_.begin() + n_);
    b.rows.assign(status_.begin() + n_, status_.end());
    return b;
  }

  struct Eta {
    int row = 0;
    double pivot = 1.0;
    std::vector<std::pair<int, double>> entries;
  };

  const LinearProgram& lp_;
  const SimplexOptions& options_;
  int n_, m_, total_;
  std::vector<int> col_start_, col_row_;
  std::vector<double> col_val_;
  std::vector<double> pricing_weight_;
  std::vector<double> cost_, lower_, upper_;
  std::vector<double> x_;
  std::vector<double> d_;  // reduced costs, maintained by the dual method
  std::vector<VarStatus> status_;
  std::vector<int> head_, position_;
  mutable Eigen::SparseLU<SparseMatrix, Eigen::COLAMDOrdering<int>> lu_;
  std::vector<Eta> etas_;
  long iterations_ = 0;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, const SimplexOptions& options, const Basis* warm_start) {
  RevisedSimplex simplex(lp, options);
  return simplex.run(warm_start);
}

}  // namespace hydrosp::lp

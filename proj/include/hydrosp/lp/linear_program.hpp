#pragma once

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace hydrosp::lp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class RowSense { kLessEqual, kGreaterEqual, kEqual };

struct Term {
  int column;
  double value;
};

// Minimization LP over bounded columns:
//   min  c^T x + offset
//   s.t. a_i^T x  (<=, >=, =)  b_i
//        l <= x <= u
// Rows are stored compressed, in insertion order.
class LinearProgram {
 public:
  int add_column(double cost, double lower, double upper, std::string name = {});
  int add_row(std::span<const Term> terms, RowSense sense, double rhs, std::string name = {});
  int add_row(std::initializer_list<Term> terms, RowSense sense, double rhs, std::string name = {}) {
    return add_row(std::span<const Term>(terms.begin(), terms.size()), sense, rhs, std::move(name));
  }

  int num_columns() const { return static_cast<int>(cost_.size()); }
  int num_rows() const { return static_cast<int>(sense_.size()); }
  std::size_t num_nonzeros() const { return terms_.size(); }

  double cost(int j) const { return cost_[j]; }
  double lower(int j) const { return lower_[j]; }
  double upper(int j) const { return upper_[j]; }
  const std::string& column_name(int j) const { return column_names_[j]; }
  std::span<const double> costs() const { return cost_; }
  std::span<const double> lowers() const { return lower_; }
  std::span<const double> uppers() const { return upper_; }

  std::span<const Term> row(int i) const {
    return {terms_.data() + row_start_[i], row_start_[i + 1] - row_start_[i]};
  }
  RowSense sense(int i) const { return sense_[i]; }
  double rhs(int i) const { return rhs_[i]; }
  const std::string& row_name(int i) const { return row_names_[i]; }

  void set_cost(int j, double c) { cost_[j] = c; }
  void set_bounds(int j, double lower, double upper);
  void set_rhs(int i, double rhs) { rhs_[i] = rhs; }

  double objective_offset() const { return offset_; }
  void set_objective_offset(double offset) { offset_ = offset; }

  // Multiplies every cost (and the offset) by `factor`.
  void scale_objective(double factor);

  double objective_value(std::span<const double> x) const;
  double row_activity(int i, std::span<const double> x) const;
  // Largest violation of any row or column bound at x.
  double max_violation(std::span<const double> x) const;

 private:
  std::vector<double> cost_, lower_, upper_;
  std::vector<std::string> column_names_;
  std::vector<std::size_t> row_start_{0};
  std::vector<Term> terms_;
  std::vector<RowSense> sense_;
  std::vector<double> rhs_;
  std::vector<std::string> row_names_;
  double offset_ = 0.0;
};

}  // namespace hydrosp::lp

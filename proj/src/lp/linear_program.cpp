#include "hydrosp/lp/linear_program.hpp"

#include <algorithm>
#include <cmath>

#include "hydrosp/errors.hpp"

namespace hydrosp::lp {

int LinearProgram::add_column(double cost, double lower, double upper, std::string name) {
  if (std::isnan(cost) || std::isnan(lower) || std::isnan(upper) || lower > upper ||
      lower == kInfinity || upper == -kInfinity) {
    throw StructuralError("invalid column bounds or cost for '" + name + "'");
  }
  cost_.push_back(cost);
  lower_.push_back(lower);
  upper_.push_back(upper);
  column_names_.push_back(std::move(name));
  return num_columns() - 1;
}

int LinearProgram::add_row(std::span<const Term> terms, RowSense sense, double rhs, std::string name) {
  if (!std::isfinite(rhs)) throw StructuralError("row '" + name + "' has a non-finite right-hand side");
  for (const Term& t : terms) {
    if (t.column < 0 || t.column >= num_columns()) {
      throw StructuralError("row '" + name + "' references column " + std::to_string(t.column) +
                            " of " + std::to_string(num_columns()));
    }
    if (!std::isfinite(t.value)) throw StructuralError("row '" + name + "' has a non-finite coefficient");
    if (t.value != 0.0) terms_.push_back(t);
  }
  row_start_.push_back(terms_.size());
  sense_.push_back(sense);
  rhs_.push_back(rhs);
  row_names_.push_back(std::move(name));
  return num_rows() - 1;
}

void LinearProgram::set_bounds(int j, double lower, double upper) {
  if (lower > upper) throw StructuralError("crossed bounds on column " + std::to_string(j));
  lower_[j] = lower;
  upper_[j] = upper;
}

void LinearProgram::scale_objective(double factor) {
  for (double& c : cost_) c *= factor;
  offset_ *= factor;
}

double LinearProgram::objective_value(std::span<const double> x) const {
  double value = offset_;
  for (int j = 0; j < num_columns(); ++j) value += cost_[j] * x[j];
  return value;
}

double LinearProgram::row_activity(int i, std::span<const double> x) const {
  double activity = 0.0;
  for (const Term& t : row(i)) activity += t.value * x[t.column];
  return activity;
}

double LinearProgram::max_violation(std::span<const double> x) const {
  double worst = 0.0;
  for (int j = 0; j < num_columns(); ++j) {
    worst = std::max({worst, lower_[j] - x[j], x[j] - upper_[j]});
  }
  for (int i = 0; i < num_rows(); ++i) {
    const double a = row_activity(i, x);
    switch (sense_[i]) {
      case RowSense::kLessEqual: worst = std::max(worst, a - rhs_[i]); break;
      case RowSense::kGreaterEqual: worst = std::max(worst, rhs_[i] - a); break;
      case RowSense::kEqual: worst = std::max(worst, std::abs(a - rhs_[i])); break;
    }
  }
  return worst;
}

}  // namespace hydrosp::lp

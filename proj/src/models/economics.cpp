#include "hydrosp/models/economics.hpp"

#include <cmath>
#include <stdexcept>

namespace hydrosp::models {

double equivalent_rate(double days, double rate) { return std::pow(1.0 + rate, days / 365.0) - 1.0; }

double equivalent_cost(double days, const CostParams& params) {
  if (!(days >= 1.0)) throw std::invalid_argument("equivalent cost needs a horizon of at least one day");
  const double re = equivalent_rate(days, params.rate);
  const double payments = params.payback_years * 365.0 / days;
  return params.unit_cost * re / (1.0 - std::pow(1.0 + re, -payments));
}

}  // namespace hydrosp::models

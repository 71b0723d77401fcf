#pragma once

namespace hydrosp::saa {

// Regularised incomplete beta function I_x(a, b).
double incomplete_beta(double x, double a, double b);

// Upper critical value t with P(T_df > t) = alpha_half. Throws
// std::invalid_argument for df < 1 or alpha_half outside (0, 0.5].
double t_quantile(double alpha_half, double df);

// Upper critical value z with P(Z > z) = alpha_half.
double normal_quantile(double alpha_half);

}  // namespace hydrosp::saa

#include "hydrosp/saa/quantiles.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hydrosp::saa {

namespace {

// Continued fraction for the incomplete beta function, modified Lentz.
double beta_fraction(double x, double a, double b) {
  constexpr double tiny = 1e-300;
  constexpr double eps = 1e-16;
  const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 10000; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < eps) break;
  }
  return h;
}

template <typename F>
double bisect_decreasing(F&& tail, double target) {
  double lo = 0.0, hi = 1.0;
  while (tail(hi) > target) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e300) return std::numeric_limits<double>::infinity();
  }
  while (hi - lo > 1e-10 * std::max(1.0, lo)) {
    const double mid = 0.5 * (lo + hi);
    if (tail(mid) > target) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double incomplete_beta(double x, double a, double b) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_fraction(x, a, b) / a;
  return 1.0 - front * beta_fraction(1.0 - x, b, a) / b;
}

double t_quantile(double alpha_half, double df) {
  if (!(df >= 1.0)) throw std::invalid_argument("t_quantile needs df >= 1");
  if (!(alpha_half > 0.0 && alpha_half <= 0.5)) throw std::invalid_argument("t_quantile needs alpha/2 in (0, 0.5]");
  if (alpha_half == 0.5) return 0.0;
  auto tail = [df](double t) { return 0.5 * incomplete_beta(df / (df + t * t), 0.5 * df, 0.5); };
  return bisect_decreasing(tail, alpha_half);
}

double normal_quantile(double alpha_half) {
  if (!(alpha_half > 0.0 && alpha_half <= 0.5)) throw std::invalid_argument("normal_quantile needs alpha/2 in (0, 0.5]");
  if (alpha_half == 0.5) return 0.0;
  auto tail = [](double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); };
  return bisect_decreasing(tail, alpha_half);
}

}  // namespace hydrosp::saa

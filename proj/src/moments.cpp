#include "cauchy_sketch/moments.hpp"

#include <cmath>
#include <algorithm>
#include <numbers>
#include <string>

#include "cauchy_sketch/errors.hpp"
#include "cauchy_sketch/specfun.hpp"

namespace cauchy_sketch {

namespace {

using std::numbers::pi;

// ln(1 + x^2) / 2 without overflow for large x.
double half_log1p_sq(double x) {
  if (x <= 1.0) return 0.5 * std::log1p(x * x);
  return std::log(x) + 0.5 * std::log1p(1.0 / (x * x));
}

void require_nonnegative(double x, const char* what) {
  if (std::isnan(x)) throw DomainError(std::string(what) + ": NaN argument");
  if (x < 0.0) throw DomainError(std::string(what) + ": requires a nonnegative argument");
}

}  // namespace

double mu(double lambda) {
  require_nonnegative(lambda, "mu");
  if (lambda == 0.0) return 0.0;
  if (std::isinf(lambda)) return INFINITY;
  // The atanh argument peaks at 1/sqrt(2) when lambda = 1.
  const double arg = std::sqrt(2.0 * lambda) / (1.0 + lambda);
  return specfun::atanh_eval(arg) + half_log1p_sq(lambda);
}

double mu_derivative(double lambda) {
  if (!(lambda > 0.0)) throw DomainError("mu_derivative: requires lambda > 0");
  return ((1.0 - lambda) / std::sqrt(2.0 * lambda) + lambda) / (1.0 + lambda * lambda);
}

double mu_inverse(double m) {
  require_nonnegative(m, "mu_inverse");
  if (std::isinf(m)) throw DomainError("mu_inverse: infinite argument");
  if (m == 0.0) return 0.0;

  // Seeds: mu ~ sqrt(2 lambda) near 0 and mu ~ ln(lambda) at large scale.
  double guess = m < 1.0 ? 0.5 * m * m : std::exp(m);
  double lo = guess;
  double hi = guess;
  while (mu(lo) > m) lo *= 0.5;
  while (mu(hi) < m) hi *= 2.0;

  double x = guess;
  for (int it = 0; it < 200; ++it) {
    const double f = mu(x) - m;
    if (f == 0.0) return x;
    if (f > 0.0) hi = x; else lo = x;
    double next = x - f / mu_derivative(x);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 4e-16 * x) return next;
    x = next;
  }
  throw BudgetExceeded("mu_inverse: no convergence in 200 iterations");
}

std::pair<double, double> mu_small_envelope(double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw DomainError("mu_small_envelope: requires 0 < lambda <= 1");
  const double s = std::sqrt(2.0 * lambda) / (1.0 + lambda);
  // The atanh factor is taken at lambda_0 = lambda, the tightest admissible choice.
  const double upper = s * (1.0 + 2.0 * lambda / (1.0 + lambda * lambda)) + 0.5 * lambda * lambda;
  return {s, upper};
}

double mu_increment(double a, double lambda) {
  if (!(a >= 1.0)) throw DomainError("mu_increment: requires a >= 1");
  require_nonnegative(lambda, "mu_increment");
  if (lambda == 0.0 || a == 1.0) return 0.0;
  // atanh(u) - atanh(v) = atanh((u - v) / (1 - uv)) with the closed-form quotient,
  // plus ln(1 + (a^2 - 1) lambda^2 / (1 + lambda^2)) / 2.
  const double eps = a - 1.0;
  const double sqrt_a = std::sqrt(a);
  const double sqrt_a_m1 = eps / (sqrt_a + 1.0);
  const double one_minus = 1.0 - lambda * sqrt_a;
  const double q = sqrt_a_m1 * std::sqrt(2.0 * lambda) * one_minus /
                   (one_minus * one_minus + lambda * (1.0 + a));
  const double ratio = lambda <= 1.0 ? lambda * lambda / (1.0 + lambda * lambda)
                                     : 1.0 / (1.0 + 1.0 / (lambda * lambda));
  return specfun::atanh_eval(q) + 0.5 * std::log1p(eps * (2.0 + eps) * ratio);
}

DeviationPair deviations(double lambda, double epsilon) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("deviations: requires lambda > 0");
  if (!(epsilon > 0.0 && epsilon <= 0.25)) throw DomainError("deviations: requires 0 < epsilon <= 1/4");
  const double a = 1.0 + epsilon;
  const double root = std::sqrt(a);
  return DeviationPair{
      .delta_plus = mu_increment(a, lambda),
      .delta_minus = mu_increment(a, lambda / a),
      .epsilon = epsilon,
      .plus_bracketed = lambda >= 1.0 / root,
      .minus_bracketed = lambda >= root,
  };
}

double expected_log1p(double lambda) {
  require_nonnegative(lambda, "expected_log1p");
  if (lambda == 0.0) return 0.0;
  const double two_over_pi = 2.0 / pi;
  if (lambda <= 1.0) {
    return -two_over_pi * std::log(lambda) * std::atan(lambda) + half_log1p_sq(lambda) +
           two_over_pi * specfun::ti2(lambda);
  }
  // Ti2 inversion folds the (pi/2) ln(lambda) term into arctan(1/lambda).
  const double inv = 1.0 / lambda;
  return two_over_pi * std::log(lambda) * std::atan(inv) + half_log1p_sq(lambda) +
         two_over_pi * specfun::ti2(inv);
}

double second_moment_upper(double lambda) {
  if (!(lambda > 0.0)) throw DomainError("second_moment_upper: requires lambda > 0");
  const double m = mu(lambda);
  return std::min(2.0 * expected_log1p(lambda), 0.5 * pi * pi) + m * m;
}

double second_moment_ratio_bound(double lambda) {
  if (!(lambda > 0.0 && lambda <= 2.0))
    throw DomainError("second_moment_ratio_bound: requires 0 < lambda <= 2");
  if (lambda <= 1.0) {
    const double opl = 1.0 + lambda;
    return lambda + 4.0 / pi - 4.0 / pi * std::log(lambda) + 8.0 / (opl * opl) +
           2.0 * lambda * std::sqrt(2.0 * lambda) / opl + lambda * lambda * lambda / 4.0;
  }
  return 0.5 * pi * pi + 2.0 + lambda * std::sqrt(2.0) + lambda * lambda * lambda / 4.0;
}

MomentProfile moment_profile(double lambda) {
  if (!(lambda > 0.0)) throw DomainError("moment_profile: requires lambda > 0");
  const double m = mu(lambda);
  const double v2 = second_moment_upper(lambda);
  return {lambda, m, expected_log1p(lambda), v2, v2 - m * m};
}

}  // namespace cauchy_sketch

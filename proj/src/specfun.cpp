#include "cauchy_sketch/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cauchy_sketch/errors.hpp"

namespace cauchy_sketch {

void detail::require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw DomainError(std::string(what) + ": non-finite argument");
}

namespace specfun {

namespace {

constexpr double kRelStop = 1e-17;
constexpr int kMaxSeriesTerms = 2000;

// Direct power series sum_{n>=1} x^n / n^b for |x| <= 0.5.
double li_series(double b, double x) {
  double sum = 0.0;
  double power = 1.0;
  for (int n = 1; n <= kMaxSeriesTerms; ++n) {
    power *= x;
    const double term = power / std::pow(static_cast<double>(n), b);
    sum += term;
    if (std::abs(term) <= kRelStop * std::abs(sum)) break;
  }
  return sum;
}

// Li_b(-y) for 0 < y <= 1, as minus an alternating sum of y^(j+1)/(j+1)^b.
double li_negative(double b, double y) {
  return -accelerated_alternating_sum(
      [&](int j) { return std::pow(y, j + 1) / std::pow(j + 1.0, b); });
}

double li_impl(double b, double x) {
  if (x == 0.0) return 0.0;
  if (std::abs(x) <= kSeriesRadius) return li_series(b, x);
  if (x < 0.0) return li_negative(b, -x);
  if (x == 1.0) {
    // zeta(b) = eta(b) / (1 - 2^(1-b)).
    return -li_negative(b, 1.0) / (1.0 - std::pow(2.0, 1.0 - b));
  }
  if (b == 2.0) {
    const double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
    return pi2_6 - std::log(x) * std::log1p(-x) - li_series(2.0, 1.0 - x);
  }
  // Duplication: Li_b(x) = 2^(1-b) Li_b(x^2) - Li_b(-x); x^2 moves toward the disk.
  return std::pow(2.0, 1.0 - b) * li_impl(b, x * x) - li_negative(b, x);
}

}  // namespace

EvalDomain li_domain(double x) {
  if (std::abs(x) <= kSeriesRadius) return {EvalDomain::Name::series_disk, kSeriesRadius};
  return {EvalDomain::Name::reflection_zone, 1.0};
}

EvalDomain ti2_domain(double x) {
  if (x <= kSeriesRadius) return {EvalDomain::Name::series_disk, kSeriesRadius};
  if (x <= 1.0) return {EvalDomain::Name::reflection_zone, 1.0};
  return {EvalDomain::Name::inversion_zone, INFINITY};
}

double atanh_eval(double x) {
  detail::require_finite(x, "atanh_eval");
  if (!(std::abs(x) < 1.0)) throw DomainError("atanh_eval: |x| must be < 1");
  return 0.5 * (std::log1p(x) - std::log1p(-x));
}

double atanh_add_arg(double x, double y) {
  detail::require_finite(x, "atanh_add_arg");
  detail::require_finite(y, "atanh_add_arg");
  if (!(std::abs(x) < 1.0) || !(std::abs(y) < 1.0))
    throw DomainError("atanh_add_arg: arguments must lie in (-1, 1)");
  return (x + y) / (1.0 + x * y);
}

double li(double b, double x) {
  detail::require_finite(b, "li");
  detail::require_finite(x, "li");
  if (x > 1.0 || x < -1.0) throw DomainError("li: requires -1 <= x <= 1");
  if (std::abs(x) == 1.0 && !(b > 1.0)) throw DomainError("li: requires b > 1 on |x| = 1");
  if (!(b > 0.0)) throw DomainError("li: requires b > 0");
  return li_impl(b, x);
}

double dilog_reflection_residual(double x) {
  detail::require_finite(x, "dilog_reflection_residual");
  if (!(x > 0.0 && x < 1.0)) throw DomainError("dilog_reflection_residual: requires 0 < x < 1");
  return li(2.0, x) + li(2.0, 1.0 - x) - li(2.0, 1.0) + std::log(x) * std::log1p(-x);
}

double ti2(double x) {
  detail::require_finite(x, "ti2");
  if (x < 0.0) throw DomainError("ti2: requires x >= 0");
  if (x == 0.0) return 0.0;
  if (x > 1.0) return ti2(1.0 / x) + 0.5 * std::numbers::pi * std::log(x);
  const double x2 = x * x;
  if (x <= kSeriesRadius) {
    double sum = 0.0;
    double power = x;
    for (int j = 0; j < kMaxSeriesTerms; ++j) {
      const double odd = 2.0 * j + 1.0;
      const double term = power / (odd * odd);
      sum += (j % 2 == 0) ? term : -term;
      if (term <= kRelStop * sum) break;
      power *= x2;
    }
    return sum;
  }
  return accelerated_alternating_sum([&](int j) {
    const double odd = 2.0 * j + 1.0;
    return x * std::pow(x2, j) / (odd * odd);
  });
}

double chi(double b, double x) {
  detail::require_finite(x, "chi");
  if (!(std::abs(x) < 1.0)) throw DomainError("chi: requires |x| < 1");
  return 0.5 * (li(b, x) - li(b, -x));
}

}  // namespace specfun
}  // namespace cauchy_sketch

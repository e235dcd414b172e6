#include "cauchy_sketch/concentration.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cauchy_sketch/errors.hpp"
#include "cauchy_sketch/cauchy.hpp"
#include "cauchy_sketch/metric.hpp"
#include "cauchy_sketch/moments.hpp"

namespace cauchy_sketch {

namespace {

using std::numbers::e;
using std::numbers::pi;

constexpr double kPrintedTailConstant = 3.126;
constexpr int kFixedPointBudget = 100;

void require_epsilon(double epsilon, const char* what) {
  if (!(epsilon > 0.0 && epsilon <= 0.25))
    throw DomainError(std::string(what) + ": requires 0 < epsilon <= 1/4");
}

// Common bracket of the small-scale rates, without the leading factor:
// 1 + 4/pi - (4/pi) ln(lambda) + 8 + 2 sqrt(2) + 1/4.
double small_scale_bracket(double log_lambda) {
  return 1.0 + 4.0 / pi - 4.0 / pi * log_lambda + 8.0 + 2.0 * std::sqrt(2.0) + 0.25;
}

}  // namespace

ScaleRegime classify_scale(double lambda, double epsilon) {
  require_epsilon(epsilon, "classify_scale");
  if (std::isnan(lambda) || lambda < 0.0) throw DomainError("classify_scale: requires lambda >= 0");
  ScaleRegime::Kind kind = ScaleRegime::Kind::really_small;
  if (lambda >= std::sqrt(1.0 + epsilon))
    kind = ScaleRegime::Kind::large;
  else if (lambda > 8.0 * epsilon * epsilon)
    kind = ScaleRegime::Kind::small;
  return {kind, lambda, epsilon};
}

std::string_view regime_name(ScaleRegime::Kind kind) {
  switch (kind) {
    case ScaleRegime::Kind::large: return "large";
    case ScaleRegime::Kind::small: return "small";
    case ScaleRegime::Kind::really_small: return "really_small";
  }
  return "unknown";
}

std::string_view source_name(ChernoffPlan::Source s) {
  switch (s) {
    case ChernoffPlan::Source::large_upper: return "large_upper";
    case ChernoffPlan::Source::large_lower: return "large_lower";
    case ChernoffPlan::Source::small_upper: return "small_upper";
    case ChernoffPlan::Source::small_lower_mid: return "small_lower_mid";
    case ChernoffPlan::Source::really_small_lower: return "really_small_lower";
  }
  return "unknown";
}

double chernoff_h(double x) {
  if (!(x > 0.0)) throw DomainError("chernoff_h: requires x > 0");
  return x * std::log(x) + 1.0 - x;
}

double xi_tail_bound(double lambda, double t) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("xi_tail_bound: requires lambda > 0");
  if (std::isnan(t)) throw DomainError("xi_tail_bound: NaN threshold");
  const bool first = t >= 2.0;
  const bool second = t >= 2.0 * std::log1p(std::sqrt(lambda));
  if (!first && !second) throw DomainError("xi_tail_bound: t outside both validity regions");
  double bound = INFINITY;
  if (first) {
    const double c1 = 2.0 / pi * lambda / std::pow(1.0 - 1.0 / e, 2);
    bound = std::min(bound, c1 * std::exp(-t));
  }
  if (second) {
    const double c2 = 2.0 / pi * (1.0 + std::sqrt(lambda));
    bound = std::min(bound, c2 * std::exp(-0.5 * t));
  }
  return std::min(bound, 1.0);
}

double xi_survival_exact(double lambda, double t) {
  if (!(lambda > 0.0)) throw DomainError("xi_survival_exact: requires lambda > 0");
  if (t <= 0.0) return 1.0;
  return survival_abs(xi_inverse(t) / lambda);
}

double xi_survival_dominating(double lambda, double t) {
  if (!(lambda > 0.0)) throw DomainError("xi_survival_dominating: requires lambda > 0");
  if (t <= 0.0) return 1.0;
  const double g = std::expm1(0.5 * t);
  return 2.0 / pi * std::atan(lambda / (g * g));
}

double small_scale_tail_constant() {
  return 32.0 * e / (3.0 * pi * (e - 1.0) * (e - 1.0));
}

double chernoff_rate_large(double epsilon, TailSide side) {
  require_epsilon(epsilon, "chernoff_rate_large");
  const double lead = 64.0 / (epsilon * epsilon * (1.0 - epsilon) * (1.0 - epsilon));
  const double half_pi2 = 0.5 * pi * pi;
  if (side == TailSide::upper) return lead * (half_pi2 + 64.0 * pi / (e * (pi * pi - 0.5)));
  return lead * (half_pi2 + 8.0 * pi * pi / (e * pi * (pi * pi - 0.25)) * std::sqrt(2.0));
}

double chernoff_rate_small(double epsilon, double lambda, TailSide side) {
  require_epsilon(epsilon, "chernoff_rate_small");
  if (std::isnan(lambda) || !(lambda > 0.0)) throw RegimeError("chernoff_rate_small: requires lambda > 0");
  const double inv_eps2 = 1.0 / (epsilon * epsilon);
  if (side == TailSide::upper) {
    if (!(lambda > 8.0 * epsilon * epsilon && lambda <= 1.0))
      throw RegimeError("chernoff_rate_small: upper tail is proven only for 8 eps^2 < lambda <= 1");
    return 8.0 * inv_eps2 * (kPrintedTailConstant + small_scale_bracket(std::log(lambda)));
  }
  if (lambda <= 1.0) return chernoff_rate_small_lower_log(epsilon, std::log(lambda));
  if (lambda <= 2.0) return 9.0 * inv_eps2 * (0.5 * pi * pi + 4.0 + 2.0 * std::sqrt(2.0));
  throw RegimeError("chernoff_rate_small: lower tail small-scale rate needs lambda <= 2");
}

double chernoff_rate_small_lower_log(double epsilon, double log_lambda) {
  require_epsilon(epsilon, "chernoff_rate_small_lower_log");
  if (std::isnan(log_lambda) || log_lambda > 0.0)
    throw RegimeError("chernoff_rate_small_lower_log: requires lambda <= 1");
  return 4.0 / (epsilon * epsilon) * small_scale_bracket(log_lambda);
}

namespace {

ChernoffPlan plan_with_delta(double epsilon, double delta, double log_delta) {
  ChernoffPlan plan{};
  plan.epsilon = epsilon;
  plan.delta_fail = delta;
  plan.log_two_over_delta = std::log(2.0) - log_delta;
  plan.rate_large_upper = chernoff_rate_large(epsilon, TailSide::upper);
  plan.rate_large_lower = chernoff_rate_large(epsilon, TailSide::lower);
  // The small-scale upper rate grows as lambda decreases toward 8 eps^2.
  const double small_floor = 8.0 * epsilon * epsilon;
  plan.rate_small_upper = 8.0 / (epsilon * epsilon) *
                          (kPrintedTailConstant + small_scale_bracket(std::log(small_floor)));
  plan.rate_small_lower_mid = chernoff_rate_small(epsilon, 1.5, TailSide::lower);

  const double others = std::max({plan.rate_large_upper, plan.rate_large_lower,
                                  plan.rate_small_upper, plan.rate_small_lower_mid});
  const double L = plan.log_two_over_delta;
  // log lambda_0 = ln(eps^2 pi / (8 e)) + ln(delta) - ln(k).
  const double log_lambda0_base = std::log(epsilon * epsilon * pi / (8.0 * e)) + log_delta;

  double k = std::ceil(L * others);
  int it = 0;
  for (;; ++it) {
    if (it >= kFixedPointBudget) throw BudgetExceeded("plan_dimension: k did not stabilize");
    const double log_lambda0 = log_lambda0_base - std::log(k);
    plan.rate_really_small = chernoff_rate_small_lower_log(epsilon, std::min(log_lambda0, 0.0));
    const double next = std::ceil(L * std::max(others, plan.rate_really_small));
    if (next == k) {
      plan.lambda0 = std::exp(log_lambda0);
      break;
    }
    k = next;
  }
  plan.fixed_point_iterations = it + 1;
  if (!(k < 1.8e19)) throw InfeasibleParameters("plan_dimension: k overflows a 64-bit count");
  plan.k = static_cast<std::uint64_t>(k);

  plan.rate_reciprocal_upper = std::max(plan.rate_large_upper, plan.rate_small_upper);
  plan.rate_reciprocal_lower =
      std::max({plan.rate_large_lower, plan.rate_small_lower_mid, plan.rate_really_small});

  struct Candidate {
    double rate;
    ChernoffPlan::Source source;
  };
  const Candidate all[] = {
      {plan.rate_large_upper, ChernoffPlan::Source::large_upper},
      {plan.rate_large_lower, ChernoffPlan::Source::large_lower},
      {plan.rate_small_upper, ChernoffPlan::Source::small_upper},
      {plan.rate_small_lower_mid, ChernoffPlan::Source::small_lower_mid},
      {plan.rate_really_small, ChernoffPlan::Source::really_small_lower},
  };
  plan.attained = std::max_element(std::begin(all), std::end(all), [](auto& a, auto& b) {
                    return a.rate < b.rate;
                  })->source;

  // u* = Delta / (2 (V^2 + A)) = 2 / (R Delta), with Delta at its smallest
  // admissible value so the recorded optimizer is the largest one the plan can need.
  const double large_gap = epsilon * (1.0 - epsilon) / 4.0;
  const double u_large_upper = 2.0 / (plan.rate_large_upper * large_gap);
  const double u_small_upper = 2.0 / (plan.rate_small_upper * epsilon * mu(small_floor));
  plan.u_star_upper = std::max(u_large_upper, u_small_upper);
  plan.u_star_lower = 2.0 / (plan.rate_large_lower * large_gap);
  return plan;
}

void require_plan_inputs(double epsilon, std::uint64_t n_points, double c) {
  if (!(c >= 3.0) || !std::isfinite(c)) throw InfeasibleParameters("plan: requires c >= 3");
  if (n_points < 2) throw InfeasibleParameters("plan: requires at least 2 points");
  if (!(epsilon <= 0.25) || !(epsilon > 0.0))
    throw InfeasibleParameters("plan: requires epsilon <= 1/4");
  const double log_floor = -c * std::log(static_cast<double>(n_points));
  // Admit epsilon equal to N^-c up to rounding of the power.
  if (std::log(epsilon) < log_floor - 1e-12 * std::abs(log_floor))
    throw InfeasibleParameters("plan: requires epsilon >= N^-c");
}

}  // namespace

ChernoffPlan plan_dimension(double epsilon, std::uint64_t n_points, double c) {
  require_plan_inputs(epsilon, n_points, c);
  const double n = static_cast<double>(n_points);
  return plan_with_delta(epsilon, std::pow(n, -c), -c * std::log(n));
}

ChernoffPlan plan_dimension_for_delta(double epsilon, double delta) {
  if (!(epsilon > 0.0 && epsilon <= 0.25))
    throw InfeasibleParameters("plan: requires 0 < epsilon <= 1/4");
  if (!(delta > 0.0 && delta < 1.0)) throw InfeasibleParameters("plan: requires 0 < delta < 1");
  return plan_with_delta(epsilon, delta, std::log(delta));
}

MaxBoundPlan max_abs_plan(std::uint64_t k, double epsilon, std::uint64_t n_points, double c) {
  if (k < 1) throw DomainError("max_abs_plan: requires k >= 1");
  if (!(epsilon > 0.0) || !(c > 0.0) || n_points < 1) throw DomainError("max_abs_plan: inputs must be positive");
  const double log_delta = -c * std::log(static_cast<double>(n_points));
  const double delta = std::pow(static_cast<double>(n_points), -c);
  const double kd = static_cast<double>(k);
  MaxBoundPlan plan{};
  plan.k = k;
  plan.delta = delta;
  plan.c_k = e / delta;
  plan.alpha = plan.c_k;
  plan.p_t = 1.0 / (kd * plan.c_k);
  plan.threshold_t = 2.0 * kd * e / (pi * delta);
  plan.lambda0 = epsilon * epsilon * pi * delta / (8.0 * kd * e);
  plan.c0 = epsilon * epsilon / 4.0;
  // H(c_k) / c_k = ln(c_k) + 1/c_k - 1 = -ln(delta) + delta/e.
  plan.rate = -log_delta + delta / e;
  plan.failure_bound = std::exp(-plan.rate);
  return plan;
}

std::pair<double, double> corollary_band(double lambda, double epsilon, double lambda0) {
  require_epsilon(epsilon, "corollary_band");
  if (!(lambda > 0.0)) throw DomainError("corollary_band: requires lambda > 0");
  if (lambda > lambda0) throw DomainError("corollary_band: requires lambda <= lambda0");
  const double e2 = 4.0 * epsilon * epsilon;
  return {(1.0 - epsilon) * (1.0 - e2), (1.0 + epsilon) * (1.0 + e2)};
}

}  // namespace cauchy_sketch

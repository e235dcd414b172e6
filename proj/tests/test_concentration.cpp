#include "doctest.h"

#include <cmath>
#include <numbers>
#include <tuple>

#include "cauchy_sketch/concentration.hpp"
#include "cauchy_sketch/errors.hpp"
#include "cauchy_sketch/kernels.hpp"
#include "cauchy_sketch/metric.hpp"
#include "cauchy_sketch/moments.hpp"

using namespace cauchy_sketch;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;
}  // namespace

TEST_CASE("classify_scale") {
  CHECK(classify_scale(2.0, 0.25).kind == ScaleRegime::Kind::large);
  CHECK(classify_scale(std::sqrt(1.25), 0.25).kind == ScaleRegime::Kind::large);
  CHECK(classify_scale(0.8, 0.25).kind == ScaleRegime::Kind::small);
  CHECK(classify_scale(0.5, 0.25).kind == ScaleRegime::Kind::really_small);
  CHECK(classify_scale(0.1, 0.25).kind == ScaleRegime::Kind::really_small);
  CHECK(regime_name(ScaleRegime::Kind::really_small) == "really_small");
}

TEST_CASE("chernoff_h") {
  CHECK(chernoff_h(1.0) == 0.0);
  const double x = kE * 1e6;
  CHECK(chernoff_h(x) / x == Approx(13.8155).epsilon(1e-5));
  CHECK(chernoff_h(kE) / kE == Approx(1.0 / kE).epsilon(1e-15));
}

TEST_CASE("xi_tail_bound") {
  CHECK(xi_tail_bound(1.0, 2.0) == Approx(0.21563).epsilon(1e-4));
  CHECK(xi_tail_bound(1.0, 2.0 * std::log(2.0)) == Approx(2.0 / kPi).epsilon(1e-14));
  CHECK(xi_tail_bound(1.0, 20.0) < 1e-7);
  CHECK_THROWS_AS(xi_tail_bound(1.0, 1.0), DomainError);
  for (double lam : {0.1, 1.0, 10.0})
    for (double t = std::max(2.0, 2.0 * std::log1p(std::sqrt(lam))); t < 40.0; t += 0.5) {
      CHECK(xi_survival_exact(lam, t) <= xi_survival_dominating(lam, t) * (1.0 + 1e-12));
      CHECK(xi_survival_dominating(lam, t) <= xi_tail_bound(lam, t));
    }
}

TEST_CASE("xi_survival_exact matches sampled frequency") {
  const auto draws = kernels::parallel::abs_draws(200000, {3, 0});
  for (double t : {0.5, 2.0, 5.0}) {
    double hits = 0;
    for (double x : draws) hits += xi(x) > t;
    const double p = xi_survival_exact(1.0, t);
    CHECK(std::abs(hits / draws.size() - p) <= 4.0 * std::sqrt(p * (1 - p) / draws.size()));
  }
}

TEST_CASE("chernoff_rate_large") {
  CHECK(chernoff_rate_large(0.25, TailSide::upper) == Approx(23354.6838307291328961).epsilon(1e-13));
  CHECK(chernoff_rate_large(0.25, TailSide::lower) == Approx(11457.9941354009801224).epsilon(1e-13));
  CHECK(chernoff_rate_large(0.125, TailSide::upper) == Approx(68634.1728903060232049).epsilon(1e-13));
  CHECK_THROWS_AS(chernoff_rate_large(0.3, TailSide::upper), DomainError);
}

TEST_CASE("chernoff_rate_small") {
  CHECK(chernoff_rate_small(0.25, 1.0, TailSide::upper) == Approx(2109.14133369361315632).epsilon(1e-13));
  CHECK(chernoff_rate_small(0.25, 1.5, TailSide::lower) == Approx(1693.90502284188519461).epsilon(1e-13));
  CHECK_THROWS_AS(chernoff_rate_small(0.25, 0.5, TailSide::upper), RegimeError);
  CHECK_THROWS_AS(chernoff_rate_small(0.25, 1.5, TailSide::upper), RegimeError);
  CHECK_THROWS_AS(chernoff_rate_small(0.25, 2.5, TailSide::lower), RegimeError);
  CHECK(small_scale_tail_constant() == Approx(3.12596807450350774935).epsilon(1e-14));
  CHECK(small_scale_tail_constant() <= 3.126);
}

TEST_CASE("rate reciprocals decrease in epsilon") {
  double prev_up = INFINITY, prev_lo = INFINITY, prev_small = INFINITY;
  for (double eps = 0.01; eps <= 0.25; eps += 0.01) {
    const double up = chernoff_rate_large(eps, TailSide::upper);
    const double lo = chernoff_rate_large(eps, TailSide::lower);
    const double small = chernoff_rate_small(eps, 0.9, TailSide::lower);
    CHECK(up < prev_up);
    CHECK(lo < prev_lo);
    CHECK(small < prev_small);
    prev_up = up;
    prev_lo = lo;
    prev_small = small;
  }
}

TEST_CASE("plan_dimension snapshot") {
  const ChernoffPlan p = plan_dimension(0.25, 100, 3.0);
  CHECK(p.delta_fail == Approx(1e-6).epsilon(1e-15));
  CHECK(p.log_two_over_delta == Approx(14.5086577385242194135).epsilon(1e-14));
  CHECK(p.k == 338846);
  CHECK(p.attained == ChernoffPlan::Source::large_upper);
  CHECK(p.rate_small_upper == Approx(2222.10676097177077214).epsilon(1e-12));
  CHECK(p.rate_small_lower_mid == Approx(1693.90502284188519461).epsilon(1e-13));
  CHECK(p.rate_really_small == Approx(3401.48380214860718407).epsilon(1e-10));
  CHECK(p.lambda0 == Approx(2.66466770162303108821e-14).epsilon(1e-10));
  CHECK(p.fixed_point_iterations <= 10);
  // Union bound over pairs.
  CHECK(p.delta_fail * 100.0 * 99.0 / 2.0 < 1.0 / 100.0);
  CHECK(p.delta_fail * 100.0 * 100.0 <= 1.0 / 100.0 * (1.0 + 1e-12));
  // Optimizer caps.
  CHECK(p.u_star_upper < 0.5);
  CHECK(p.u_star_lower < 1.0);
}

TEST_CASE("plan_dimension feasibility") {
  CHECK_THROWS_AS(plan_dimension(0.3, 100, 3.0), InfeasibleParameters);
  CHECK_THROWS_AS(plan_dimension(1e-7, 100, 3.0), InfeasibleParameters);
  CHECK_THROWS_AS(plan_dimension(0.25, 100, 2.0), InfeasibleParameters);
  CHECK_THROWS_AS(plan_dimension(0.25, 1, 3.0), InfeasibleParameters);
  CHECK_NOTHROW(plan_dimension(1e-6, 100, 3.0));
  CHECK_NOTHROW(plan_dimension(0.25, 100, 3.0));
}

TEST_CASE("planning at a given delta and the really-small term") {
  const ChernoffPlan p = plan_dimension_for_delta(0.25, 1e-2);
  CHECK(p.k == 123741);
  const ChernoffPlan q = plan_dimension(0.25, 1000000, 30.0);
  CHECK(q.rate_really_small > q.rate_small_lower_mid);
  CHECK(q.fixed_point_iterations <= 10);
}

TEST_CASE("max_abs_plan") {
  const MaxBoundPlan m = max_abs_plan(1000, 0.25, 100, 3.0);
  CHECK(m.delta == Approx(1e-6).epsilon(1e-15));
  CHECK(m.c_k == Approx(kE * 1e6).epsilon(1e-15));
  CHECK(m.p_t == Approx(1.0 / (1000.0 * kE * 1e6)).epsilon(1e-15));
  CHECK(m.lambda0 == Approx(0.0625 * kPi / (8000.0 * kE * 1e6)).epsilon(1e-14));
  CHECK(m.lambda0 == Approx(9.03e-12).epsilon(1e-3));
  CHECK(m.c0 == 0.015625);
  CHECK(m.rate == Approx(chernoff_h(m.alpha) * m.k * m.p_t).epsilon(1e-12));
  CHECK(m.failure_bound == Approx(m.delta * std::exp(-m.delta / kE)).epsilon(1e-12));
  CHECK(m.failure_bound < m.delta);
  CHECK(m.lambda0 * m.threshold_t == Approx(m.c0).epsilon(1e-12));
}

TEST_CASE("corollary_band") {
  auto [lo, hi] = corollary_band(1e-12, 0.25, 1e-11);
  CHECK(lo == Approx(0.5625).epsilon(1e-15));
  CHECK(hi == Approx(1.5625).epsilon(1e-15));
  std::tie(lo, hi) = corollary_band(1e-12, 0.1, 1e-11);
  CHECK(lo == Approx(0.864).epsilon(1e-14));
  CHECK(hi == Approx(1.144).epsilon(1e-14));
  std::tie(lo, hi) = corollary_band(1e-12, 1e-9, 1e-11);
  CHECK(lo == Approx(1.0).epsilon(1e-8));
  CHECK(hi == Approx(1.0).epsilon(1e-8));
  CHECK_THROWS_AS(corollary_band(1e-10, 0.25, 1e-11), DomainError);
}

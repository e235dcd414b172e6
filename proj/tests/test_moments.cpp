#include "doctest.h"

#include <cmath>
#include <numbers>
#include <tuple>

#include "cauchy_sketch/errors.hpp"
#include "cauchy_sketch/moments.hpp"
#include "cauchy_sketch/quadrature.hpp"

using namespace cauchy_sketch;
using doctest::Approx;
using verify::MeanIntegrand;
using verify::quadrature_mean;

namespace {
constexpr double kPi = std::numbers::pi;

// mpmath quadrature at 30 digits: lambda, E xi, E ln(1 + lambda |X|), E xi^2.
struct Row {
  double lambda, mu, log_mean, second;
};
constexpr Row kTable[] = {
    {1e-6, 0.00141421309146833595, 9.4318474589177e-6, 1.11342895116034e-5},
    {1e-4, 0.01414166919092785378, 6.50015454315044906e-4, 8.20248249236289e-4},
    {0.5, 0.91629073187415506518, 0.62634149942942946700, 1.34196790889029370157},
    {1.0, 1.22794717729951567994, 0.92969539834161021499, 2.21739607130468131941},
    {2.0, 1.60943791243410037460, 1.31948867998937477642, 3.53845234186252504410},
    {10.0, 2.73904072583621342483, 2.51725316048984779729, 9.02036370833302259456},
    {100.0, 4.74616732713654104837, 4.64090275724529251884, 24.6119331153823017007},
};
}  // namespace

TEST_CASE("mu against frozen values") {
  CHECK(mu(0.0) == 0.0);
  for (const Row& r : kTable) {
    CAPTURE(r.lambda);
    CHECK(mu(r.lambda) == Approx(r.mu).epsilon(1e-13));
    CHECK(expected_log1p(r.lambda) == Approx(r.log_mean).epsilon(1e-9));
  }
  CHECK(mu(2.0) == Approx(std::log(5.0)).epsilon(1e-15));
  CHECK(mu(1.0) == Approx(std::atanh(std::sqrt(0.5)) + 0.5 * std::log(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(mu(-1.0), DomainError);
}

TEST_CASE("quadrature reproduces frozen values") {
  for (const Row& r : kTable) {
    CAPTURE(r.lambda);
    CHECK(std::abs(quadrature_mean(MeanIntegrand::xi, r.lambda) - r.mu) <= 1e-12);
    CHECK(std::abs(quadrature_mean(MeanIntegrand::log1p, r.lambda) - r.log_mean) <= 1e-12);
    CHECK(std::abs(quadrature_mean(MeanIntegrand::xi_squared, r.lambda) - r.second) <= 1e-11);
  }
  CHECK_THROWS_AS(quadrature_mean(MeanIntegrand::xi, 1.0, 1e-14), DomainError);
  CHECK_THROWS_AS(quadrature_mean(MeanIntegrand::xi, 0.0), DomainError);
}

TEST_CASE("mu closed form equals quadrature on a log grid") {
  for (double lam = 1e-5; lam < 1e5; lam *= 2.9) {
    CAPTURE(lam);
    CHECK(std::abs(mu(lam) - quadrature_mean(MeanIntegrand::xi, lam)) <= 1e-9);
    CHECK(std::abs(expected_log1p(lam) - quadrature_mean(MeanIntegrand::log1p, lam)) <= 1e-8);
  }
}

TEST_CASE("expected_log1p") {
  CHECK(expected_log1p(0.0) == 0.0);
  CHECK(expected_log1p(1.0) == Approx(0.5 * std::log(2.0) + 2.0 / kPi * 0.91596559417721901505).epsilon(1e-15));
}

TEST_CASE("mu_derivative matches finite differences and is positive") {
  for (double lam = 1e-4; lam < 1e4; lam *= 3.7) {
    const double h = 1e-6 * lam;
    CHECK(mu_derivative(lam) == Approx((mu(lam + h) - mu(lam - h)) / (2 * h)).epsilon(1e-6));
    CHECK(mu_derivative(lam) > 0.0);
  }
}

TEST_CASE("mu_inverse") {
  CHECK(mu_inverse(0.0) == 0.0);
  CHECK(mu_inverse(mu(2.0)) == Approx(2.0).epsilon(1e-10));
  CHECK(mu_inverse(mu(1e-4)) == Approx(1e-4).epsilon(1e-10));
  for (double lam = 1e-9; lam < 1e9; lam *= 5.3) CHECK(mu_inverse(mu(lam)) == Approx(lam).epsilon(1e-10));
  CHECK_THROWS_AS(mu_inverse(-0.5), DomainError);
}

TEST_CASE("mu_small_envelope") {
  auto [lo, hi] = mu_small_envelope(1.0);
  CHECK(lo == Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(hi == Approx(std::sqrt(2.0) + 0.5).epsilon(1e-15));
  CHECK(lo <= mu(1.0));
  CHECK(mu(1.0) <= hi);
  std::tie(lo, hi) = mu_small_envelope(1e-4);
  CHECK(lo == Approx(0.0141407).epsilon(1e-5));
  CHECK(hi == Approx(0.0141435 + 5e-9).epsilon(1e-5));
  const double s = std::sqrt(0.02) / 1.01;
  CHECK(mu(0.01) >= s);
  CHECK(mu(0.01) <= s * (1.0 + 0.02 / 1.0001) + 5e-5);
  for (double lam = 1e-8; lam <= 1.0; lam *= 2.3) {
    std::tie(lo, hi) = mu_small_envelope(lam);
    const double q = quadrature_mean(MeanIntegrand::xi, lam);
    CHECK(lo <= q);
    CHECK(q <= hi);
  }
  CHECK_THROWS_AS(mu_small_envelope(1.5), DomainError);
}

TEST_CASE("mu_increment and the deviation sandwich") {
  for (double a : {1.05, 1.1, 1.25})
    for (double lam : {1.0 / std::sqrt(a), 1.0, 5.0, 100.0}) {
      const double inc = mu_increment(a, lam);
      CHECK(inc == Approx(mu(a * lam) - mu(lam)).epsilon(1e-12));
      CHECK(inc < a - 1.0);
      CHECK(inc >= (a - 1.0) / 4.0 * (1.0 - (a - 1.0)));
    }
  // Cancellation-free at tiny increments.
  CHECK(mu_increment(1.0 + 1e-12, 1.0) == Approx(1e-12 * mu_derivative(1.0)).epsilon(1e-6));
  CHECK(mu_increment(1.0, 3.0) == 0.0);
}

TEST_CASE("deviations") {
  const DeviationPair d = deviations(2.0, 0.25);
  CHECK(d.delta_plus == Approx(mu(2.5) - mu(2.0)).epsilon(1e-12));
  CHECK(d.delta_minus == Approx(mu(2.0) - mu(1.6)).epsilon(1e-12));
  CHECK(d.plus_bracketed);
  CHECK(d.minus_bracketed);
  const DeviationPair tiny = deviations(1.0, 1e-9);
  CHECK(tiny.delta_plus < 1e-8);
  CHECK(tiny.delta_minus < 1e-8);
  CHECK_THROWS_AS(deviations(1.0, 0.3), DomainError);
}

TEST_CASE("second moment bounds") {
  CHECK(second_moment_upper(1.0) == Approx(3.36723).epsilon(1e-5));
  CHECK(second_moment_upper(100.0) == Approx(kPi * kPi / 2.0 + mu(100.0) * mu(100.0)).epsilon(1e-15));
  CHECK(second_moment_upper(1e-12) < 1e-5);
  CHECK(second_moment_ratio_bound(1.0) == Approx(1.0 + 4.0 / kPi + 2.0 + std::sqrt(2.0) + 0.25).epsilon(1e-15));
  CHECK(second_moment_ratio_bound(1.0) == Approx(5.937).epsilon(1e-4));
  CHECK(second_moment_ratio_bound(2.0) == Approx(11.763).epsilon(1e-4));
  CHECK(second_moment_ratio_bound(0.01) == Approx(14.99189340392174).epsilon(1e-14));
  CHECK_THROWS_AS(second_moment_ratio_bound(2.5), DomainError);
  for (const Row& r : kTable) {
    CHECK(r.second <= second_moment_upper(r.lambda));
    CHECK(r.second - r.mu * r.mu <= kPi * kPi / 2.0);
    if (r.lambda <= 2.0) CHECK(r.second / r.lambda <= second_moment_ratio_bound(r.lambda));
  }
}

TEST_CASE("moment_profile") {
  const MomentProfile p = moment_profile(1.0);
  CHECK(p.mu == mu(1.0));
  CHECK(p.log_mean == expected_log1p(1.0));
  CHECK(p.second_moment_upper == second_moment_upper(1.0));
  CHECK(p.variance_upper <= kPi * kPi / 2.0);
}

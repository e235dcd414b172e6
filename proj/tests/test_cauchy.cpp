#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "cauchy_sketch/cauchy.hpp"
#include "cauchy_sketch/errors.hpp"
#include "cauchy_sketch/kernels.hpp"
#include "cauchy_sketch/rng.hpp"
#include "cauchy_sketch/verify.hpp"

using namespace cauchy_sketch;
using doctest::Approx;

TEST_CASE("rng is a pure function of seed and position") {
  CounterRng a({11, 3});
  CounterRng b({11, 3});
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  CounterRng c({11, 4});
  CHECK(c.word_at(0) != CounterRng({11, 3}).word_at(0));
  CounterRng d({11, 3});
  d.seek(57);
  CHECK(d.next_u64() == CounterRng({11, 3}).word_at(57));
  for (int i = 0; i < 10000; ++i) {
    const double u = a.next_open_uniform();
    CHECK(u > 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("cauchy_from_uniform") {
  CHECK(cauchy_from_uniform(0.5) == 0.0);
  CHECK(cauchy_from_uniform(0.75) == Approx(1.0).epsilon(1e-15));
  CHECK(cauchy_from_uniform(0.25) == Approx(-1.0).epsilon(1e-15));
  CHECK_THROWS_AS(cauchy_from_uniform(0.0), DomainError);
  CHECK_THROWS_AS(cauchy_from_uniform(1.0), DomainError);
}

TEST_CASE("sampling is deterministic and indexable") {
  CounterRng a({5, 0});
  std::vector<double> xs;
  for (int i = 0; i < 20; ++i) xs.push_back(sample_standard_cauchy(a).value);
  CounterRng b({5, 0});
  for (int i = 0; i < 20; ++i) {
    CHECK(sample_standard_cauchy(b).value == xs[i]);
    CHECK(cauchy_at(CounterRng({5, 0}), i) == xs[i]);
  }
}

TEST_CASE("cdf_abs and survival_abs") {
  CHECK(cdf_abs(0.0) == 0.0);
  CHECK(cdf_abs(1.0) == Approx(0.5).epsilon(1e-15));
  CHECK(cdf_abs(10.0) == Approx(0.93655).epsilon(1e-5));
  CHECK(survival_abs(1.0) == Approx(0.5).epsilon(1e-15));
  CHECK(survival_abs(3.7) == Approx(1.0 - cdf_abs(3.7)).epsilon(1e-14));
  CHECK(survival_abs(100.0) == Approx(0.006366).epsilon(1e-4));
  CHECK_THROWS_AS(cdf_abs(-1.0), DomainError);
  CHECK_THROWS_AS(survival_abs(0.0), DomainError);
}

TEST_CASE("stable_combination") {
  CounterRng a({9, 1});
  CounterRng b({9, 1});
  const std::vector<double> one{1.0};
  CHECK(stable_combination(one, a) == sample_standard_cauchy(b).value);
  const std::vector<double> zero{0.0, 0.0, 0.0};
  CHECK(stable_combination(zero, a) == 0.0);
  CHECK_THROWS_AS(stable_combination(std::vector<double>{}, a), DomainError);
}

TEST_CASE("draws pass KS against the absolute Cauchy law") {
  const auto draws = kernels::parallel::abs_draws(20000, {21, 0});
  const double d = verify::ks_statistic(draws, [](double t) { return cdf_abs(t); });
  CHECK(d < verify::ks_critical_1pct(20000));
}

TEST_CASE("1-stability: normalized combination is standard Cauchy") {
  const std::vector<double> w{0.5, -2.0, 1.5, 3.0};
  CounterRng rng({33, 0});
  std::vector<double> s(20000);
  for (double& x : s) x = std::abs(stable_combination(w, rng)) / 7.0;
  CHECK(verify::ks_statistic(s, [](double t) { return cdf_abs(t); }) < verify::ks_critical_1pct(20000));
}

#pragma once

#include <span>

#include "cauchy_sketch/rng.hpp"

namespace cauchy_sketch {

/// One draw X ~ Cauchy(1), density 1 / (pi (1 + x^2)).
struct CauchySample {
  double value;
};

/// Inverse CDF of the standard Cauchy law: tan(pi (u - 1/2)), u in (0, 1).
double cauchy_from_uniform(double u);

/// Draws one standard Cauchy variate, consuming one uniform from `rng`.
CauchySample sample_standard_cauchy(CounterRng& rng);

/// Standard Cauchy variate number `index` of the stream, by direct addressing.
/// Equal to the value sample_standard_cauchy would return at that position.
double cauchy_at(const CounterRng& rng, std::uint64_t index);

/// P{|X| <= t} = (2/pi) arctan(t).
double cdf_abs(double t);

/// P{|X| > t} = (2/pi) arctan(1/t), accurate in the far tail.
double survival_abs(double t);

/// Sum_j v_j X_j with iid standard Cauchy X_j drawn in order from `rng`.
/// Distributed as ||v||_1 X.
double stable_combination(std::span<const double> v, CounterRng& rng);

}  // namespace cauchy_sketch

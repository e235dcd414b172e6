#include "cauchy_sketch/cauchy.hpp"

#include <cmath>
#include <numbers>

#include "cauchy_sketch/errors.hpp"

namespace cauchy_sketch {

double cauchy_from_uniform(double u) {
  if (!(u > 0.0 && u < 1.0)) throw DomainError("cauchy_from_uniform: requires 0 < u < 1");
  return std::tan(std::numbers::pi * (u - 0.5));
}

CauchySample sample_standard_cauchy(CounterRng& rng) {
  return {cauchy_from_uniform(rng.next_open_uniform())};
}

double cauchy_at(const CounterRng& rng, std::uint64_t index) {
  return std::tan(std::numbers::pi * (rng.open_uniform_at(index) - 0.5));
}

double cdf_abs(double t) {
  detail::require_finite(t, "cdf_abs");
  if (t < 0.0) throw DomainError("cdf_abs: requires t >= 0");
  return std::numbers::inv_pi * 2.0 * std::atan(t);
}

double survival_abs(double t) {
  if (std::isnan(t)) throw DomainError("survival_abs: NaN argument");
  if (!(t > 0.0)) throw DomainError("survival_abs: requires t > 0");
  return std::numbers::inv_pi * 2.0 * std::atan(1.0 / t);
}

double stable_combination(std::span<const double> v, CounterRng& rng) {
  if (v.empty()) throw DomainError("stable_combination: empty weight vector");
  double sum = 0.0;
  for (double w : v) sum += w * sample_standard_cauchy(rng).value;
  return sum;
}

}  // namespace cauchy_sketch

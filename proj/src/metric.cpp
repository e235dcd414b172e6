#include "cauchy_sketch/metric.hpp"

#include <cmath>
#include <string>

#include "cauchy_sketch/errors.hpp"

namespace cauchy_sketch {

SketchedPoint::SketchedPoint(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw DimensionMismatch("SketchedPoint: k must be >= 1");
  for (double c : coords_) detail::require_finite(c, "SketchedPoint");
}

double xi(double a) {
  if (std::isnan(a)) throw DomainError("xi: NaN argument");
  if (a < 0.0) throw DomainError("xi: requires a >= 0");
  // log1p keeps the sqrt(a) leading term exact for tiny a.
  return std::log1p(std::sqrt(a)) + 0.5 * std::log1p(a);
}

double xi_inverse(double value) {
  detail::require_finite(value, "xi_inverse");
  if (value < 0.0) throw DomainError("xi_inverse: requires value >= 0");
  if (value == 0.0) return 0.0;
  // Write a = s^2 and solve g(s) = ln(1+s) + ln(1+s^2)/2 = value, increasing in s.
  // g(s) <= 2 ln(1+s) and g(s) >= ln(1+s) bracket the root.
  double lo = std::expm1(0.5 * value);
  double hi = std::expm1(value);
  double s = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double g = std::log1p(s) + 0.5 * std::log1p(s * s) - value;
    if (g > 0.0) hi = s; else lo = s;
    const double dg = 1.0 / (1.0 + s) + s / (1.0 + s * s);
    double next = s - g / dg;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - s) <= 1e-16 * s) { s = next; break; }
    s = next;
  }
  return s * s;
}

double rho(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size())
    throw DimensionMismatch("rho: sketches have k = " + std::to_string(u.size()) + " and " +
                            std::to_string(v.size()));
  if (u.empty()) throw DimensionMismatch("rho: k must be >= 1");
  // Neumaier-compensated sum.
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double term = xi(std::abs(u[i] - v[i]));
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term))
      comp += (sum - t) + term;
    else
      comp += (term - t) + sum;
    sum = t;
  }
  return (sum + comp) / static_cast<double>(u.size());
}

double rho(const SketchedPoint& u, const SketchedPoint& v) { return rho(u.coords(), v.coords()); }

std::pair<double, double> xi_small_envelope(double a) {
  if (!(a > 0.0 && a < 1.0 / 6.0)) throw DomainError("xi_small_envelope: requires 0 < a < 1/6");
  const double r = std::sqrt(a);
  return {r, r * (1.0 + 0.5 * a)};
}

}  // namespace cauchy_sketch

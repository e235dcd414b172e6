#include "cauchy_sketch/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "cauchy_sketch/errors.hpp"
#include "cauchy_sketch/metric.hpp"

namespace cauchy_sketch::verify {

namespace {

constexpr int kPanelBudget = 1100;

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 31>;

struct Accumulator {
  double value = 0.0;
  double error = 0.0;
  int panels = 0;

  template <class F>
  void add(F&& f, double a, double b) {
    // Panels are graded so the integrand is smooth on each; the difference
    // between one 61-point rule and two half-width rules bounds the error.
    const double m = 0.5 * (a + b);
    const double whole = Kronrod::integrate(f, a, b, 0, 0.0);
    const double halves = Kronrod::integrate(f, a, m, 0, 0.0) + Kronrod::integrate(f, m, b, 0, 0.0);
    value += halves;
    error += std::abs(whole - halves) + 4.0 * std::numeric_limits<double>::epsilon() * std::abs(halves);
    ++panels;
  }
};

}  // namespace

QuadratureResult quadrature_expectation(const std::function<double(double)>& g, double lambda, double tol) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("quadrature: requires lambda > 0");
  if (!(tol >= 1e-13)) throw DomainError("quadrature: requires tol >= 1e-13");

  Accumulator acc;
  const double stop = tol * 1e-2;

  // Inner piece: g(lambda x) / (1 + x^2) on (0, 1].
  auto inner = [&](double x) { return g(lambda * x) / (1.0 + x * x); };
  double h = 1.0;
  while (h * g(lambda * h) >= stop * 1e-1 && h > 1e-300) {
    if (acc.panels >= kPanelBudget) throw BudgetExceeded("quadrature: inner panel budget exhausted");
    acc.add(inner, 0.5 * h, h);
    h *= 0.5;
  }
  // g is increasing, so the remaining piece on (0, h) lies in [0, h g(lambda h)].
  const double remainder = h * g(lambda * h);
  acc.value += 0.5 * remainder;
  acc.error += 0.5 * remainder;

  // Outer piece after x -> 1/u: g(lambda / u) / (1 + u^2) on (0, 1].
  auto outer = [&](double u) { return g(lambda / u) / (1.0 + u * u); };
  h = 1.0;
  double tail = INFINITY;
  while (true) {
    if (acc.panels >= kPanelBudget) throw BudgetExceeded("quadrature: outer panel budget exhausted");
    // For g growing at most like ln^2, int_0^h g(lambda/u) du <= h (3 g(lambda/h) + 5).
    tail = h * (3.0 * g(lambda / h) + 5.0);
    if (tail < stop) break;
    acc.add(outer, 0.5 * h, h);
    h *= 0.5;
  }

  const double scale = 2.0 * std::numbers::inv_pi;
  const double error = scale * (acc.error + tail);
  if (!(error <= tol))
    throw BudgetExceeded("quadrature: error estimate " + std::to_string(error) + " above tolerance");
  return {scale * acc.value, error, acc.panels};
}

double quadrature_mean(MeanIntegrand fn, double lambda, double tol) {
  switch (fn) {
    case MeanIntegrand::xi:
      return quadrature_expectation([](double a) { return xi(a); }, lambda, tol).value;
    case MeanIntegrand::xi_squared:
      return quadrature_expectation([](double a) { const double v = xi(a); return v * v; }, lambda, tol).value;
    case MeanIntegrand::log1p:
      return quadrature_expectation([](double a) { return std::log1p(a); }, lambda, tol).value;
  }
  throw DomainError("quadrature_mean: unknown integrand");
}

}  // namespace cauchy_sketch::verify

#pragma once

#include <functional>

namespace cauchy_sketch::verify {

enum class MeanIntegrand { xi, xi_squared, log1p };

struct QuadratureResult {
  double value;
  double error_estimate;
  int panels;
};

/// E g(lambda |X|) for X ~ Cauchy(1), i.e. (2/pi) int_0^inf g(lambda x) / (1 + x^2) dx.
///
/// The half line is split at x = 1 and the outer piece mapped by x -> 1/u, giving
///   (2/pi) [ int_0^1 g(lambda x)/(1+x^2) dx + int_0^1 g(lambda/u)/(1+u^2) du ].
/// Both pieces are integrated over geometric panels [2^-(j+1), 2^-j] refined
/// toward 0, each panel by adaptive Gauss-Kronrod. The second integrand grows
/// like a power of ln(1/u); the panel walk stops once the remaining piece is
/// below tol / 100 under that growth. g must be nonnegative and nondecreasing.
QuadratureResult quadrature_expectation(const std::function<double(double)>& g, double lambda,
                                        double tol = 1e-12);

/// quadrature_expectation for the built-in integrands.
double quadrature_mean(MeanIntegrand fn, double lambda, double tol = 1e-12);

}  // namespace cauchy_sketch::verify

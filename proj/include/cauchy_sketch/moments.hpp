#pragma once

#include <utility>

namespace cauchy_sketch {

/// First and second moment information for xi(lambda |X|), X ~ Cauchy(1).
struct MomentProfile {
  double lambda;               // scale, the l1 distance ||x - y||_1
  double mu;                   // E xi(lambda |X|)
  double log_mean;             // E ln(1 + lambda |X|)
  double second_moment_upper;  // upper bound on E xi^2(lambda |X|)
  double variance_upper;       // second_moment_upper - mu^2, at most pi^2 / 2
};

/// Band widths around mu(lambda) at relative scale epsilon.
struct DeviationPair {
  double delta_plus;   // mu((1+eps) lambda) - mu(lambda)
  double delta_minus;  // mu(lambda) - mu(lambda / (1+eps))
  double epsilon;
  bool plus_bracketed;   // lambda >= 1/sqrt(1+eps): eps(1-eps)/4 <= delta_plus < eps
  bool minus_bracketed;  // lambda >= sqrt(1+eps): same bracket for delta_minus
};

/// mu(lambda) = atanh(sqrt(2 lambda) / (1 + lambda)) + ln(1 + lambda^2) / 2.
double mu(double lambda);

/// d mu / d lambda = ((1 - lambda) / sqrt(2 lambda) + lambda) / (1 + lambda^2).
double mu_derivative(double lambda);

/// The lambda >= 0 with mu(lambda) = m.
double mu_inverse(double m);

/// Lower and upper envelopes of mu on (0, 1]:
///   s <= mu(lambda) <= s (1 + 2 lambda / (1 + lambda^2)) + lambda^2 / 2,
/// with s = sqrt(2 lambda) / (1 + lambda).
std::pair<double, double> mu_small_envelope(double lambda);

/// mu(a lambda) - mu(lambda) for a >= 1, evaluated without cancellation.
double mu_increment(double a, double lambda);

DeviationPair deviations(double lambda, double epsilon);

/// E ln(1 + lambda |X|) = -(2/pi) ln(lambda) arctan(lambda)
///                        + ln(1 + lambda^2) / 2 + (2/pi) Ti2(lambda).
double expected_log1p(double lambda);

/// min(2 E ln(1 + lambda |X|), pi^2 / 2) + mu(lambda)^2 >= E xi^2(lambda |X|).
double second_moment_upper(double lambda);

/// Piecewise bound on E xi^2(lambda |X|) / lambda for 0 < lambda <= 2.
double second_moment_ratio_bound(double lambda);

MomentProfile moment_profile(double lambda);

}  // namespace cauchy_sketch

#pragma once

namespace cauchy_sketch::specfun {

/// Which evaluation scheme a special function uses at a given argument.
///
/// `series_disk` is plain power-series summation for |x| <= 0.5.
/// `reflection_zone` is the rest of the unit interval, where the argument is
/// first transformed (dilogarithm reflection, duplication, or an accelerated
/// alternating sum). `inversion_zone` is x > 1, reached through the
/// inverse-tangent-integral inversion formula.
struct EvalDomain {
  enum class Name { series_disk, reflection_zone, inversion_zone };
  Name name;
  double boundary;  // upper edge of the zone in |x|
};

inline constexpr double kSeriesRadius = 0.5;

EvalDomain li_domain(double x);
EvalDomain ti2_domain(double x);

/// Inverse hyperbolic tangent, 0.5 * (log1p(x) - log1p(-x)), for |x| < 1.
double atanh_eval(double x);

/// Argument z with atanh(x) + atanh(y) = atanh(z), i.e. (x + y) / (1 + xy).
double atanh_add_arg(double x, double y);

/// Polylogarithm Li_b(x) for real b and x <= 1.
/// Requires b > 1 when |x| = 1 and b > 0 otherwise.
double li(double b, double x);

/// Li2(x) + Li2(1 - x) - Li2(1) + ln(x) ln(1 - x); vanishes on (0, 1).
double dilog_reflection_residual(double x);

/// Inverse tangent integral Ti2(x) = sum_j (-1)^j x^(2j+1) / (2j+1)^2, x >= 0.
double ti2(double x);

/// Legendre chi: (Li_b(x) - Li_b(-x)) / 2 for |x| < 1.
double chi(double b, double x);

/// Sum_{k>=0} (-1)^k a(k) for a totally monotone sequence a, by the
/// Cohen-Rodriguez Villegas-Zagier acceleration with `terms` terms.
/// Error is about 2 a(0) / 5.828^terms.
template <class Seq>
double accelerated_alternating_sum(Seq&& a, int terms = 40);

}  // namespace cauchy_sketch::specfun

#include <cmath>

template <class Seq>
double cauchy_sketch::specfun::accelerated_alternating_sum(Seq&& a, int terms) {
  const double n = terms;
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double c = -d;
  double s = 0.0;
  for (int k = 0; k < terms; ++k) {
    c = b - c;
    s += c * a(k);
    b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0));
  }
  return s / d;
}

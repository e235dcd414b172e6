#pragma once

#include <cstdint>
#include <string_view>
#include <utility>

namespace cauchy_sketch {

/// The three distance scales with separately proven concentration.
///   large:        lambda >= sqrt(1 + eps), band [mu(lambda/(1+eps)), mu((1+eps) lambda)]
///   small:        8 eps^2 < lambda < sqrt(1 + eps), band (1 -+ eps) mu(lambda)
///   really_small: lambda <= 8 eps^2, only the lower side
///                 (1 - eps)(1 - 4 eps^2) mu(lambda) is proven.
struct ScaleRegime {
  enum class Kind { large, small, really_small };
  Kind kind;
  double lambda;
  double epsilon;
};

ScaleRegime classify_scale(double lambda, double epsilon);
std::string_view regime_name(ScaleRegime::Kind kind);

enum class TailSide { upper, lower };

/// Per-regime Chernoff rate reciprocals and the target dimension they imply.
struct ChernoffPlan {
  /// Where the maximal rate reciprocal was attained.
  enum class Source { large_upper, large_lower, small_upper, small_lower_mid, really_small_lower };

  double epsilon;
  double rate_large_upper;
  double rate_large_lower;
  double rate_small_upper;      // worst case over 8 eps^2 < lambda <= 1, i.e. lambda -> 8 eps^2
  double rate_small_lower_mid;  // 1 <= lambda <= 2 branch
  double rate_really_small;     // small-scale lower rate at lambda_0, self-consistent in k
  double rate_reciprocal_upper;  // max over upper-tail regimes
  double rate_reciprocal_lower;  // max over lower-tail regimes
  double u_star_upper;  // optimizer of the attaining upper regime; < 1/2
  double u_star_lower;  // large-scale lower optimizer; < 1
  double delta_fail;    // per-pair failure budget
  double log_two_over_delta;
  double lambda0;       // really-small threshold at the planned k
  int fixed_point_iterations;
  Source attained;
  std::uint64_t k;
};

std::string_view source_name(ChernoffPlan::Source s);

/// Bounds for the max of k iid |X_i| used to reach the really-small scale.
struct MaxBoundPlan {
  std::uint64_t k;
  double delta;
  double c_k;          // e / delta
  double alpha;        // equals c_k
  double p_t;          // 1 / (k c_k)
  double threshold_t;  // 2 k e / (pi delta): P{max |X_i| > t} <= delta at unit scale
  double lambda0;      // eps^2 pi / (8 k e N^c)
  double c0;           // eps^2 / 4, bound on lambda0 max |X_i|
  double rate;         // H(alpha) k p_t = ln(c_k) + 1/c_k - 1
  double failure_bound;  // exp(-rate) = delta exp(-delta/e)
};

/// H(x) = x ln x + 1 - x.
double chernoff_h(double x);

/// Upper bound on P{xi(lambda |X|) > t}: min of C1 e^{-t} (t >= 2) and
/// C2 e^{-t/2} (t >= 2 ln(1 + sqrt(lambda))), clamped to 1.
double xi_tail_bound(double lambda, double t);

/// Exact P{xi(lambda |X|) > t}.
double xi_survival_exact(double lambda, double t);

/// Survival of the dominating variable 2 ln(1 + sqrt(lambda |X|)):
/// (2/pi) arctan(lambda / (e^{t/2} - 1)^2).
double xi_survival_dominating(double lambda, double t);

double chernoff_rate_large(double epsilon, TailSide side);
double chernoff_rate_small(double epsilon, double lambda, TailSide side);

/// Same as chernoff_rate_small(eps, lambda, lower) for lambda <= 1 with
/// ln(lambda) supplied directly, so lambda may underflow a double.
double chernoff_rate_small_lower_log(double epsilon, double log_lambda);

/// 32 e / (3 pi (e - 1)^2), printed rounded up as 3.126 in the small-scale rate.
double small_scale_tail_constant();

/// Target dimension for N points with failure budget delta = N^{-c}.
ChernoffPlan plan_dimension(double epsilon, std::uint64_t n_points, double c);

/// Target dimension for an explicit per-pair failure budget delta. The
/// really-small threshold is then lambda_0 = eps^2 pi delta / (8 k e).
ChernoffPlan plan_dimension_for_delta(double epsilon, double delta);

MaxBoundPlan max_abs_plan(std::uint64_t k, double epsilon, std::uint64_t n_points, double c);

/// Multiplicative band ((1-eps)(1-4eps^2), (1+eps)(1+4eps^2)) on mu(lambda)
/// for 0 < lambda <= lambda0.
std::pair<double, double> corollary_band(double lambda, double epsilon, double lambda0);

}  // namespace cauchy_sketch

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cauchy_sketch/concentration.hpp"
#include "cauchy_sketch/quadrature.hpp"
#include "cauchy_sketch/rng.hpp"

namespace cauchy_sketch::verify {

// ---------------------------------------------------------------------------
// Reports

enum class CaseKind { deterministic, monte_carlo };

/// How closed_form and oracle are compared.
///   equal:    pass iff |oracle - closed_form| <= tolerance
///   at_most:  pass iff oracle <= closed_form + tolerance (closed_form is a bound)
enum class Comparison { equal, at_most };

struct CaseResult {
  std::string name;
  std::string input;  // human-readable descriptor of the inputs
  double closed_form = 0.0;
  double oracle = 0.0;
  double residual = 0.0;  // oracle - closed_form
  double tolerance = 0.0;
  double std_error = 0.0;  // Monte Carlo only
  CaseKind kind = CaseKind::deterministic;
  Comparison comparison = Comparison::equal;
  bool gated = true;  // informational cases never fail a suite
  bool pass = false;
};

CaseResult make_case(std::string name, std::string input, double closed_form, double oracle,
                     double tolerance, Comparison cmp = Comparison::equal);

/// Monte Carlo check that an empirical frequency does not exceed a bound:
/// pass iff empirical <= bound + 3 SE, SE the binomial standard error at the bound.
CaseResult make_frequency_case(std::string name, std::string input, double bound,
                               std::uint64_t hits, std::uint64_t trials);

struct VerificationReport {
  std::string suite;
  std::vector<CaseResult> cases;
  RngSeed rng;
  std::string generator;
  std::int64_t runtime_ms = 0;

  bool passed() const;
  std::size_t gated_failures() const;
};

/// One JSON object per line: a header line, then one line per case.
void write_jsonl(std::ostream& out, const VerificationReport& report);
void print_summary(std::ostream& out, const VerificationReport& report);

// ---------------------------------------------------------------------------
// Statistics

/// sup_x |F_n(x) - F(x)| for a one-sample Kolmogorov-Smirnov test. Sorts a copy.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

/// sup_x |F_n(x) - G_m(x)| for two samples.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

/// Asymptotic 1% critical value sqrt(-ln(0.005)/2) / sqrt(n_eff) = 1.628 / sqrt(n_eff).
double ks_critical_1pct(double n_eff);

// ---------------------------------------------------------------------------
// Brute-force oracles, independent of the specfun evaluation paths.

/// Li_b(x) by direct summation with the geometric tail bound, |x| < 1;
/// zeta(b) by direct summation plus Euler-Maclaurin tail at x = 1.
double li_brute(double b, double x);

/// Ti2(x) for 0 <= x <= 1 by the alternating series, averaging the final
/// two partial sums.
double ti2_brute(double x);

// ---------------------------------------------------------------------------
// Monte Carlo drivers

struct ConcentrationTrial {
  double lambda;
  double epsilon;
  std::uint64_t k;
  std::uint64_t trials;
  std::uint64_t fail_upper;
  std::uint64_t fail_lower;
  ScaleRegime::Kind regime;
  double band_lower;
  double band_upper;

  double failure_fraction() const {
    return trials == 0 ? 0.0 : static_cast<double>(fail_upper + fail_lower) / static_cast<double>(trials);
  }
};

/// Band the mean (1/k) sum xi(lambda |X_i|) must stay in: the mu-scaled band
/// [mu(lambda/(1+eps)), mu((1+eps) lambda)] at large scale, (1 -+ eps) mu(lambda) below.
std::pair<double, double> concentration_band(double lambda, double epsilon);

/// `trials` independent means of k draws; trial t uses kernels::trial_stream(seed, t).
ConcentrationTrial run_concentration_trial(double lambda, double epsilon, std::uint64_t k,
                                           std::uint64_t trials, RngSeed seed);

struct KSearchOptions {
  std::uint64_t trials = 1000;
  std::uint64_t k_start = 16;
  std::uint64_t k_max = std::uint64_t{1} << 22;
};

/// Smallest k (doubling, then bisection) whose failure fraction is <= target_fail.
/// All candidates share the same per-trial streams.
std::uint64_t empirical_k_search(double lambda, double epsilon, double target_fail, RngSeed seed,
                                 KSearchOptions options = {});

/// Empirical P{lambda max_i |X_i| > t} at t = (2 lambda / pi) k e / delta against delta.
CaseResult verify_max_bound(std::uint64_t k, double lambda, double delta, std::uint64_t trials,
                            RngSeed seed);

// ---------------------------------------------------------------------------
// Suites

struct SuiteOptions {
  RngSeed seed{20240917, 0};
  /// Overrides every Monte Carlo sample count in the suite; 0 skips Monte Carlo cases.
  std::optional<std::uint64_t> trials;
};

const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

/// Runs one named suite. Throws std::invalid_argument for an unknown name.
VerificationReport run_suite(std::string_view name, const SuiteOptions& options);

}  // namespace cauchy_sketch::verify

#include "cauchy_sketch/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include "json.hpp"

#include "cauchy_sketch/errors.hpp"
#include "cauchy_sketch/kernels.hpp"
#include "cauchy_sketch/moments.hpp"
#include "cauchy_sketch/version.hpp"

namespace cauchy_sketch::verify {

CaseResult make_case(std::string name, std::string input, double closed_form, double oracle,
                     double tolerance, Comparison cmp) {
  CaseResult c;
  c.name = std::move(name);
  c.input = std::move(input);
  c.closed_form = closed_form;
  c.oracle = oracle;
  c.residual = oracle - closed_form;
  c.tolerance = tolerance;
  c.comparison = cmp;
  c.pass = cmp == Comparison::equal ? std::abs(c.residual) <= tolerance : c.residual <= tolerance;
  return c;
}

CaseResult make_frequency_case(std::string name, std::string input, double bound, std::uint64_t hits,
                               std::uint64_t trials) {
  const double n = static_cast<double>(trials);
  const double p = std::clamp(bound, 0.0, 1.0);
  const double se = std::sqrt(p * (1.0 - p) / n);
  CaseResult c = make_case(std::move(name), std::move(input), bound, static_cast<double>(hits) / n,
                           3.0 * se, Comparison::at_most);
  c.kind = CaseKind::monte_carlo;
  c.std_error = se;
  return c;
}

bool VerificationReport::passed() const { return gated_failures() == 0; }

std::size_t VerificationReport::gated_failures() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.gated && !c.pass; }));
}

void write_jsonl(std::ostream& out, const VerificationReport& report) {
  nlohmann::json header = {
      {"type", "report"},
      {"suite", report.suite},
      {"seed", report.rng.seed},
      {"stream", report.rng.stream_id},
      {"generator", report.generator},
      {"version", kVersion},
      {"cases", report.cases.size()},
      {"gated_failures", report.gated_failures()},
      {"pass", report.passed()},
      {"runtime_ms", report.runtime_ms},
  };
  out << header.dump() << '\n';
  for (std::size_t i = 0; i < report.cases.size(); ++i) {
    const CaseResult& c = report.cases[i];
    nlohmann::json line = {
        {"type", "case"},
        {"index", i},
        {"name", c.name},
        {"input", c.input},
        {"closed_form", c.closed_form},
        {"oracle", c.oracle},
        {"residual", c.residual},
        {"tolerance", c.tolerance},
        {"comparison", c.comparison == Comparison::equal ? "equal" : "at_most"},
        {"kind", c.kind == CaseKind::deterministic ? "deterministic" : "monte_carlo"},
        {"std_error", c.std_error},
        {"gated", c.gated},
        {"pass", c.pass},
    };
    out << line.dump() << '\n';
  }
}

void print_summary(std::ostream& out, const VerificationReport& report) {
  std::size_t informational = 0;
  for (const CaseResult& c : report.cases) {
    if (!c.gated) {
      ++informational;
      continue;
    }
    if (!c.pass)
      out << "  FAIL " << c.name << " [" << c.input << "] closed_form=" << c.closed_form
          << " oracle=" << c.oracle << " residual=" << c.residual << " tol=" << c.tolerance << '\n';
  }
  out << report.suite << ": " << report.cases.size() - informational - report.gated_failures() << "/"
      << report.cases.size() - informational << " gated cases passed, " << informational
      << " informational, " << report.runtime_ms << " ms\n";
}

// ---------------------------------------------------------------------------

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw DomainError("ks_statistic: empty sample");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw DomainError("ks_two_sample: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

double ks_critical_1pct(double n_eff) { return std::sqrt(-0.5 * std::log(0.005)) / std::sqrt(n_eff); }

// ---------------------------------------------------------------------------

double li_brute(double b, double x) {
  if (x == 1.0) {
    // Partial sum to N plus Euler-Maclaurin tail N^{1-b}/(b-1) - N^{-b}/2 + b N^{-b-1}/12.
    const int n_terms = 100000;
    double sum = 0.0;
    for (int n = n_terms; n >= 1; --n) sum += std::pow(static_cast<double>(n), -b);
    const double big_n = n_terms;
    return sum + std::pow(big_n, 1.0 - b) / (b - 1.0) - 0.5 * std::pow(big_n, -b) +
           b * std::pow(big_n, -b - 1.0) / 12.0;
  }
  if (!(std::abs(x) < 1.0)) throw DomainError("li_brute: requires |x| < 1 or x = 1");
  const double ax = std::abs(x);
  std::vector<double> terms;
  double power = 1.0;
  for (long n = 1;; ++n) {
    power *= x;
    const double term = power / std::pow(static_cast<double>(n), b);
    terms.push_back(term);
    const double tail = std::abs(power) * ax / std::pow(n + 1.0, b) / (1.0 - ax);
    if (tail < 1e-18 || n > 200000000) break;
  }
  double sum = 0.0;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) sum += *it;
  return sum;
}

double ti2_brute(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("ti2_brute: requires 0 <= x <= 1");
  const double x2 = x * x;
  double sum = 0.0;
  double prev = 0.0;
  double power = x;
  for (long j = 0; j < 400000; ++j) {
    const double odd = 2.0 * j + 1.0;
    const double term = power / (odd * odd);
    prev = sum;
    sum += (j % 2 == 0) ? term : -term;
    if (term < 1e-20) return sum;
    power *= x2;
  }
  return 0.5 * (sum + prev);
}

// ---------------------------------------------------------------------------

std::pair<double, double> concentration_band(double lambda, double epsilon) {
  const ScaleRegime regime = classify_scale(lambda, epsilon);
  if (regime.kind == ScaleRegime::Kind::large)
    return {mu(lambda / (1.0 + epsilon)), mu((1.0 + epsilon) * lambda)};
  const double m = mu(lambda);
  return {(1.0 - epsilon) * m, (1.0 + epsilon) * m};
}

ConcentrationTrial run_concentration_trial(double lambda, double epsilon, std::uint64_t k,
                                           std::uint64_t trials, RngSeed seed) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw RegimeError("run_concentration_trial: requires lambda > 0");
  if (!(epsilon > 0.0 && epsilon <= 0.25)) throw RegimeError("run_concentration_trial: requires 0 < epsilon <= 1/4");
  if (k < 1) throw RegimeError("run_concentration_trial: requires k >= 1");
  const auto [lo, hi] = concentration_band(lambda, epsilon);
  const std::vector<double> means = kernels::parallel::trial_means(lambda, k, trials, seed);
  ConcentrationTrial out{lambda, epsilon, k, trials, 0, 0, classify_scale(lambda, epsilon).kind, lo, hi};
  for (double m : means) {
    if (m > hi) ++out.fail_upper;
    if (m < lo) ++out.fail_lower;
  }
  return out;
}

std::uint64_t empirical_k_search(double lambda, double epsilon, double target_fail, RngSeed seed,
                                 KSearchOptions options) {
  if (!(target_fail > 0.0 && target_fail <= 0.1))
    throw DomainError("empirical_k_search: requires 0 < target_fail <= 0.1");
  if (options.trials == 0 || options.k_start == 0) throw DomainError("empirical_k_search: empty search");
  auto ok = [&](std::uint64_t k) {
    return run_concentration_trial(lambda, epsilon, k, options.trials, seed).failure_fraction() <= target_fail;
  };
  std::uint64_t hi = options.k_start;
  std::uint64_t lo = 0;  // largest k known to fail (0: none tested)
  while (!ok(hi)) {
    lo = hi;
    if (hi > options.k_max / 2) throw BudgetExceeded("empirical_k_search: k exceeds the search budget");
    hi *= 2;
  }
  if (lo == 0) lo = hi / 2;
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (mid == 0) break;
    if (ok(mid)) hi = mid; else lo = mid;
  }
  return hi;
}

CaseResult verify_max_bound(std::uint64_t k, double lambda, double delta, std::uint64_t trials, RngSeed seed) {
  if (k < 1 || !(lambda > 0.0) || !(delta > 0.0) || trials == 0)
    throw DomainError("verify_max_bound: inputs must be positive");
  const double t = 2.0 * lambda / std::numbers::pi * static_cast<double>(k) * std::numbers::e / delta;
  const std::vector<double> maxima = kernels::parallel::trial_max_abs(k, trials, seed);
  const auto hits = static_cast<std::uint64_t>(
      std::count_if(maxima.begin(), maxima.end(), [&](double m) { return lambda * m > t; }));
  return make_frequency_case("max_abs_exceedance",
                             "k=" + std::to_string(k) + " lambda=" + std::to_string(lambda) +
                                 " delta=" + std::to_string(delta) + " t=" + std::to_string(t),
                             delta, hits, trials);
}

}  // namespace cauchy_sketch::verify

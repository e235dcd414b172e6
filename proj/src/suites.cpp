#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "cauchy_sketch/cauchy.hpp"
#include "cauchy_sketch/kernels.hpp"
#include "cauchy_sketch/metric.hpp"
#include "cauchy_sketch/moments.hpp"
#include "cauchy_sketch/specfun.hpp"
#include "cauchy_sketch/verify.hpp"

namespace cauchy_sketch::verify {
namespace {

using Cases = std::vector<CaseResult>;
constexpr double kPi = std::numbers::pi;

std::string fmt(std::initializer_list<std::pair<const char*, double>> kv) {
  std::ostringstream s;
  s.precision(17);
  bool first = true;
  for (const auto& [k, v] : kv) {
    if (!first) s << ' ';
    s << k << '=' << v;
    first = false;
  }
  return s.str();
}

std::uint64_t mc_count(const SuiteOptions& o, std::uint64_t fallback) { return o.trials.value_or(fallback); }

RngSeed sub_seed(const SuiteOptions& o, std::uint64_t tag) { return {o.seed.seed, o.seed.stream_id ^ mix64(tag)}; }

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g;
  for (int i = 0; i < n; ++i) g.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
  return g;
}

void specfun_cases(Cases& out) {
  for (double x : {-0.9, -0.5, -0.1, 0.1, 0.3, 0.5})
    for (double b : {1.5, 2.0, 3.0})
      out.push_back(make_case("li_vs_series", fmt({{"b", b}, {"x", x}}), specfun::li(b, x), li_brute(b, x), 1e-12));
  for (double b : {2.0, 3.0, 4.0})
    out.push_back(make_case("zeta_vs_series", fmt({{"b", b}}), specfun::li(b, 1.0), li_brute(b, 1.0), 1e-9));
  out.push_back(make_case("li2_one", "x=1", specfun::li(2.0, 1.0), kPi * kPi / 6.0, 1e-14));
  out.push_back(make_case("li2_half", "x=0.5", specfun::li(2.0, 0.5),
                          kPi * kPi / 12.0 - 0.5 * std::log(2.0) * std::log(2.0), 1e-14));
  for (double x : {0.0, 0.1, 0.5, 0.75, 1.0})
    out.push_back(make_case("ti2_vs_series", fmt({{"x", x}}), specfun::ti2(x), ti2_brute(x), 1e-11));
  for (double x : {-0.9, -0.3, 0.2, 0.7})
    for (double y : {-0.6, 0.1, 0.8}) {
      const double lhs = specfun::atanh_eval(x) + specfun::atanh_eval(y);
      out.push_back(make_case("atanh_addition", fmt({{"x", x}, {"y", y}}),
                              specfun::atanh_eval(specfun::atanh_add_arg(x, y)), lhs, 1e-12));
    }
  for (double x : log_grid(1e-3, 1e3, 25))
    out.push_back(make_case("arctan_inversion", fmt({{"x", x}}), kPi / 2.0, std::atan(x) + std::atan(1.0 / x), 1e-14));
  for (int i = 1; i < 20; ++i) {
    const double x = i / 20.0;
    out.push_back(make_case("dilog_reflection", fmt({{"x", x}}), 0.0, specfun::dilog_reflection_residual(x), 1e-10));
  }
  for (double b : {2.0, 3.0})
    for (double x : {0.1, 0.4, 0.6, 0.9}) {
      const double lhs = specfun::li(b, x) + specfun::li(b, -x);
      out.push_back(make_case("li_squared", fmt({{"b", b}, {"x", x}}),
                              std::pow(2.0, 1.0 - b) * specfun::li(b, x * x), lhs, 1e-10));
    }
  for (double x : {2.0, 10.0, 100.0})
    out.push_back(make_case("ti2_inversion", fmt({{"x", x}}), 0.5 * kPi * std::log(x),
                            specfun::ti2(x) - specfun::ti2(1.0 / x), 1e-12));
  for (double lam : log_grid(1e-3, 1e3, 13)) {
    auto f = [](double l) { return specfun::ti2(l) - std::log(l) * std::atan(l); };
    out.push_back(make_case("ti2_log_arctan_symmetry", fmt({{"lambda", lam}}), f(lam), f(1.0 / lam), 1e-11));
  }
  for (double x : {0.1, 0.5, 0.9}) {
    out.push_back(make_case("chi1_is_atanh", fmt({{"x", x}}), specfun::chi(1.0, x), std::atanh(x), 1e-13));
    out.push_back(make_case("chi2_odd_part", fmt({{"x", x}}), specfun::chi(2.0, x),
                            0.5 * (li_brute(2.0, x) - li_brute(2.0, -x)), 1e-12));
  }
}

void cauchy_cases(Cases& out, const SuiteOptions& o) {
  out.push_back(make_case("cdf_abs_one", "t=1", cdf_abs(1.0), 0.5, 1e-15));
  for (double t : log_grid(1e-3, 1e3, 7))
    out.push_back(make_case("cdf_plus_survival", fmt({{"t", t}}), 1.0, cdf_abs(t) + survival_abs(t), 1e-15));
  const std::uint64_t n = mc_count(o, 100000);
  if (n == 0) return;
  const std::vector<double> draws = kernels::parallel::abs_draws(n, sub_seed(o, 1));
  const double d = ks_statistic(draws, [](double t) { return cdf_abs(t); });
  CaseResult c = make_case("ks_abs_cauchy", fmt({{"n", static_cast<double>(n)}}), ks_critical_1pct(n), d, 0.0,
                           Comparison::at_most);
  c.kind = CaseKind::monte_carlo;
  out.push_back(c);
  // 1-stability: sum_j w_j X_j / ||w||_1 is standard Cauchy.
  CounterRng weights(sub_seed(o, 2));
  CounterRng rng(sub_seed(o, 3));
  for (int v = 0; v < 3; ++v) {
    std::vector<double> w(1 + v * 4);
    double norm = 0.0;
    for (double& x : w) {
      x = 2.0 * weights.next_open_uniform() - 1.0;
      norm += std::abs(x);
    }
    std::vector<double> s(n);
    for (double& x : s) x = std::abs(stable_combination(w, rng)) / norm;
    const double dv = ks_statistic(std::move(s), [](double t) { return cdf_abs(t); });
    CaseResult cv = make_case("ks_stable_combination", fmt({{"dim", static_cast<double>(w.size())}}),
                              ks_critical_1pct(n), dv, 0.0, Comparison::at_most);
    cv.kind = CaseKind::monte_carlo;
    out.push_back(cv);
  }
}

void metric_cases(Cases& out, const SuiteOptions& o) {
  out.push_back(make_case("xi_one", "a=1", xi(1.0), std::log(2.0) + 0.5 * std::log(2.0), 1e-15));
  for (double a : log_grid(1e-6, 1e6, 13))
    out.push_back(make_case("xi_inverse_roundtrip", fmt({{"a", a}}), a, xi_inverse(xi(a)), 1e-12 * a));
  for (double a : log_grid(1e-4, 1e2, 9))
    for (double b : log_grid(1e-4, 1e2, 9))
      out.push_back(make_case("xi_subadditive", fmt({{"a", a}, {"b", b}}), xi(a) + xi(b), xi(a + b), 1e-14,
                              Comparison::at_most));
  for (double a : log_grid(1e-8, 0.16, 12)) {
    const auto [lo, hi] = xi_small_envelope(a);
    out.push_back(make_case("xi_envelope_lower", fmt({{"a", a}}), xi(a), lo, 1e-16, Comparison::at_most));
    out.push_back(make_case("xi_envelope_upper", fmt({{"a", a}}), hi, xi(a), 1e-16, Comparison::at_most));
  }
  const std::uint64_t triples = mc_count(o, 1000);
  CounterRng rng(sub_seed(o, 4));
  for (std::size_t k : {1u, 7u, 64u}) {
    double worst_triangle = -INFINITY;
    double worst_symmetry = 0.0;
    double worst_identity = 0.0;
    for (std::uint64_t t = 0; t < triples; ++t) {
      std::vector<double> x(k), y(k), z(k);
      for (std::size_t i = 0; i < k; ++i) {
        x[i] = sample_standard_cauchy(rng).value;
        y[i] = sample_standard_cauchy(rng).value;
        z[i] = sample_standard_cauchy(rng).value;
      }
      worst_triangle = std::max(worst_triangle, rho(x, z) - rho(x, y) - rho(y, z));
      worst_symmetry = std::max(worst_symmetry, std::abs(rho(x, y) - rho(y, x)));
      worst_identity = std::max(worst_identity, std::abs(rho(x, x)));
    }
    if (triples == 0) continue;
    const std::string in = fmt({{"k", static_cast<double>(k)}, {"triples", static_cast<double>(triples)}});
    out.push_back(make_case("rho_triangle", in, 0.0, worst_triangle, 1e-12, Comparison::at_most));
    out.push_back(make_case("rho_symmetry", in, 0.0, worst_symmetry, 0.0));
    out.push_back(make_case("rho_identity", in, 0.0, worst_identity, 0.0));
  }
}

void moments_cases(Cases& out, const SuiteOptions& o) {
  for (double lam : log_grid(1e-4, 1e4, 9)) {
    const std::string in = fmt({{"lambda", lam}});
    const double m = mu(lam);
    out.push_back(make_case("mu_vs_quadrature", in, m, quadrature_mean(MeanIntegrand::xi, lam), 1e-9));
    out.push_back(make_case("log1p_mean_vs_quadrature", in, expected_log1p(lam),
                            quadrature_mean(MeanIntegrand::log1p, lam), 1e-8));
    const double second = quadrature_mean(MeanIntegrand::xi_squared, lam);
    out.push_back(make_case("variance_bound", in, kPi * kPi / 2.0, second - m * m, 1e-9, Comparison::at_most));
    out.push_back(make_case("second_moment_upper", in, second_moment_upper(lam), second, 1e-9, Comparison::at_most));
    if (lam <= 2.0)
      out.push_back(make_case("second_moment_ratio", in, second_moment_ratio_bound(lam), second / lam, 1e-9,
                              Comparison::at_most));
    out.push_back(make_case("mu_inverse_roundtrip", in, lam, mu_inverse(m), 1e-10 * lam));
    const double h = 1e-5 * lam;
    out.push_back(make_case("mu_derivative_fd", in, mu_derivative(lam), (mu(lam + h) - mu(lam - h)) / (2 * h),
                            1e-6 * std::max(1.0, mu_derivative(lam))));
  }
  out.push_back(make_case("mu_two_is_ln5", "lambda=2", mu(2.0), std::log(5.0), 1e-14));
  for (double lam : {1e-6, 1e-4, 1e-2, 0.1}) {
    const auto [lo, hi] = mu_small_envelope(lam);
    const double q = quadrature_mean(MeanIntegrand::xi, lam);
    out.push_back(make_case("mu_small_envelope_lower", fmt({{"lambda", lam}}), q, lo, 1e-15, Comparison::at_most));
    out.push_back(make_case("mu_small_envelope_upper", fmt({{"lambda", lam}}), hi, q, 1e-15, Comparison::at_most));
  }
  for (double a : {1.05, 1.1, 1.25})
    for (double lam : {1.0 / std::sqrt(a), 1.0, 5.0, 100.0}) {
      const std::string in = fmt({{"a", a}, {"lambda", lam}});
      const double inc = mu_increment(a, lam);
      out.push_back(make_case("deviation_upper", in, a - 1.0, inc, -1e-12, Comparison::at_most));
      out.push_back(make_case("deviation_lower", in, inc, (a - 1.0) / 4.0 * (1.0 - (a - 1.0)), -1e-12,
                              Comparison::at_most));
      out.push_back(make_case("mu_increment_direct", in, inc, mu(a * lam) - mu(lam), 1e-12));
    }
  // MGF splitting: E[e^{uY} 1{uY<=1}] <= 1 + u E Y + u^2 E Y^2.
  const std::uint64_t n = mc_count(o, 1000000);
  if (n == 0) return;
  for (double lam : {0.5, 1.0}) {
    const std::vector<double> draws = kernels::parallel::abs_draws(n, sub_seed(o, 5));
    const double ey = mu(lam);
    const double ey2 = quadrature_mean(MeanIntegrand::xi_squared, lam);
    for (double u : {0.1, 0.4}) {
      double s = 0.0;
      double s2 = 0.0;
      for (double x : draws) {
        const double y = xi(lam * x);
        const double v = u * y <= 1.0 ? std::exp(u * y) : 0.0;
        s += v;
        s2 += v * v;
      }
      const double mean = s / n;
      const double se = std::sqrt(std::max(0.0, s2 / n - mean * mean) / n);
      CaseResult c = make_case("mgf_splitting", fmt({{"lambda", lam}, {"u", u}}), 1.0 + u * ey + u * u * ey2, mean,
                               3.0 * se, Comparison::at_most);
      c.kind = CaseKind::monte_carlo;
      c.std_error = se;
      out.push_back(c);
    }
  }
}

void tails_cases(Cases& out, const SuiteOptions& o) {
  const std::uint64_t n = mc_count(o, 1000000);
  for (double lam : {0.1, 1.0, 10.0}) {
    const double t_min = std::max(2.0, 2.0 * std::log1p(std::sqrt(lam)));
    std::vector<double> draws;
    if (n > 0) draws = kernels::parallel::abs_draws(n, sub_seed(o, 6));
    for (int i = 0; i < 8; ++i) {
      const double t = t_min + 2.0 * i;
      const std::string in = fmt({{"lambda", lam}, {"t", t}});
      const double bound = xi_tail_bound(lam, t);
      out.push_back(make_case("tail_exact", in, bound, xi_survival_exact(lam, t), 0.0, Comparison::at_most));
      out.push_back(make_case("tail_dominating", in, bound, xi_survival_dominating(lam, t), 0.0, Comparison::at_most));
      if (n == 0) continue;
      std::uint64_t hits = 0;
      for (double x : draws) hits += xi(lam * x) > t;
      out.push_back(make_frequency_case("tail_monte_carlo", in, bound, hits, n));
    }
  }
}

void concentration_cases(Cases& out, const SuiteOptions& o) {
  const ChernoffPlan p = plan_dimension(0.25, 100, 3.0);
  out.push_back(make_case("tail_constant_printed", "", 3.126, small_scale_tail_constant(), 0.0, Comparison::at_most));
  out.push_back(make_case("union_bound", "eps=0.25 N=100 c=3", 1.0 / 100.0, p.delta_fail * 100.0 * 99.0 / 2.0, 0.0,
                          Comparison::at_most));
  out.push_back(make_case("u_star_upper_cap", "eps=0.25", 0.5, p.u_star_upper, 0.0, Comparison::at_most));
  out.push_back(make_case("u_star_lower_cap", "eps=0.25", 1.0, p.u_star_lower, 0.0, Comparison::at_most));
  const std::uint64_t trials = mc_count(o, 1000);
  if (trials == 0) return;
  struct Row { double lambda; std::uint64_t k; };
  for (const Row& r : {Row{2.0, 4000}, Row{0.1, 8000}}) {
    const ConcentrationTrial t = run_concentration_trial(r.lambda, 0.25, r.k, trials, sub_seed(o, 7));
    const std::string in = fmt({{"lambda", r.lambda}, {"k", static_cast<double>(r.k)}});
    const bool upper_proven = t.regime != ScaleRegime::Kind::really_small;
    CaseResult lower = make_frequency_case("concentration_lower", in, 0.01, t.fail_lower, trials);
    CaseResult upper = make_frequency_case("concentration_upper", in, 0.01, t.fail_upper, trials);
    upper.gated = upper_proven;
    out.push_back(lower);
    out.push_back(upper);
  }
  // k = 1 shows no concentration; recorded only.
  const ConcentrationTrial degenerate = run_concentration_trial(1.0, 0.25, 1, trials, sub_seed(o, 8));
  CaseResult c = make_frequency_case("concentration_k1", "lambda=1 k=1", 0.01,
                                     degenerate.fail_lower + degenerate.fail_upper, trials);
  c.gated = false;
  out.push_back(c);
}

void maxbound_cases(Cases& out, const SuiteOptions& o) {
  const double x = std::numbers::e * 1e6;
  out.push_back(make_case("chernoff_h_identity", "alpha=e*1e6", std::log(x) + 1.0 / x - 1.0, chernoff_h(x) / x, 1e-12));
  out.push_back(make_case("chernoff_h_one", "alpha=1", 0.0, chernoff_h(1.0), 0.0));
  const MaxBoundPlan m = max_abs_plan(1000, 0.25, 100, 3.0);
  out.push_back(make_case("max_plan_failure", "k=1000 N=100 c=3", m.delta, m.failure_bound, 0.0, Comparison::at_most));
  const std::uint64_t trials = mc_count(o, 10000);
  if (trials == 0) return;
  out.push_back(verify_max_bound(100, 1.0, 0.01, trials, sub_seed(o, 9)));
  out.push_back(verify_max_bound(1000, 1.0, 0.001, trials, sub_seed(o, 10)));
  out.push_back(verify_max_bound(100, 1.0, 1.0, trials, sub_seed(o, 11)));
}

using Runner = void (*)(Cases&, const SuiteOptions&);

struct Entry {
  std::string_view name;
  Runner run;
};

const Entry kSuites[] = {
    {"specfun", [](Cases& c, const SuiteOptions&) { specfun_cases(c); }},
    {"cauchy", cauchy_cases},
    {"metric", metric_cases},
    {"moments", moments_cases},
    {"tails", tails_cases},
    {"concentration", concentration_cases},
    {"maxbound", maxbound_cases},
};

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const Entry& e : kSuites) v.emplace_back(e.name);
    v.emplace_back("all");
    return v;
  }();
  return names;
}

bool is_suite(std::string_view name) {
  for (const std::string& s : suite_names())
    if (s == name) return true;
  return false;
}

VerificationReport run_suite(std::string_view name, const SuiteOptions& options) {
  if (!is_suite(name)) throw std::invalid_argument("unknown suite: " + std::string(name));
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = std::string(name);
  report.rng = options.seed;
  report.generator = CounterRng::kName;
  for (const Entry& e : kSuites)
    if (name == "all" || name == e.name) e.run(report.cases, options);
  report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace cauchy_sketch::verify

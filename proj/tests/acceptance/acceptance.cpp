// Acceptance checks. One line per criterion; exit status is nonzero if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cauchy_sketch/cauchy.hpp"
#include "cauchy_sketch/concentration.hpp"
#include "cauchy_sketch/kernels.hpp"
#include "cauchy_sketch/metric.hpp"
#include "cauchy_sketch/moments.hpp"
#include "cauchy_sketch/quadrature.hpp"
#include "cauchy_sketch/rng.hpp"
#include "cauchy_sketch/specfun.hpp"
#include "cauchy_sketch/verify.hpp"

using namespace cauchy_sketch;
using verify::MeanIntegrand;
using verify::quadrature_mean;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr RngSeed kSeed{20240917, 0};

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// lambda in {10^j : j = -4..4} plus 50 log-uniform points on [1e-4, 1e4].
std::vector<double> moment_grid() {
  std::vector<double> g;
  for (int j = -4; j <= 4; ++j) g.push_back(std::pow(10.0, j));
  CounterRng rng({kSeed.seed, 1});
  for (int i = 0; i < 50; ++i) g.push_back(std::pow(10.0, -4.0 + 8.0 * rng.next_open_uniform()));
  return g;
}

Outcome moments_vs_quadrature() {
  double worst_mu = 0.0, worst_log = 0.0;
  for (double lam : moment_grid()) {
    worst_mu = std::max(worst_mu, std::abs(mu(lam) - quadrature_mean(MeanIntegrand::xi, lam)));
    worst_log = std::max(worst_log, std::abs(expected_log1p(lam) - quadrature_mean(MeanIntegrand::log1p, lam)));
  }
  return {worst_mu <= 1e-9 && worst_log <= 1e-8,
          "max|mu - quad| = " + num(worst_mu) + " (<= 1e-9), max|E ln - quad| = " + num(worst_log) + " (<= 1e-8)"};
}

Outcome variance_bound() {
  double worst_var = -INFINITY;
  for (double lam : moment_grid()) {
    const double m = quadrature_mean(MeanIntegrand::xi, lam);
    worst_var = std::max(worst_var, quadrature_mean(MeanIntegrand::xi_squared, lam) - m * m);
  }
  double worst_ratio = -INFINITY;  // quad(E xi^2)/lambda - bound
  for (int i = 1; i <= 200; ++i) {
    const double lam = 2.0 * std::pow(1e-6, (200.0 - i) / 199.0);
    const double r = quadrature_mean(MeanIntegrand::xi_squared, lam) / lam;
    worst_ratio = std::max(worst_ratio, r - second_moment_ratio_bound(lam));
  }
  return {worst_var <= kPi * kPi / 2.0 + 1e-9 && worst_ratio <= 0.0,
          "max variance = " + num(worst_var) + " (<= pi^2/2 = " + num(kPi * kPi / 2.0) +
              "), max(E xi^2/lambda - ratio bound) = " + num(worst_ratio) + " (<= 0) on (0, 2]"};
}

Outcome identities() {
  using namespace specfun;
  double atanh_add = 0, arctan = 0, reflection = 0, squared = 0, inversion = 0, symmetry = 0;
  for (double x = -0.95; x < 0.96; x += 0.05)
    for (double y = -0.95; y < 0.96; y += 0.05)
      atanh_add = std::max(atanh_add, std::abs(atanh_eval(x) + atanh_eval(y) - atanh_eval(atanh_add_arg(x, y))));
  for (double x = 1e-4; x < 1e4; x *= 1.1)
    arctan = std::max(arctan, std::abs(std::atan(x) + std::atan(1.0 / x) - kPi / 2.0));
  for (int i = 1; i < 1000; ++i) reflection = std::max(reflection, std::abs(dilog_reflection_residual(i / 1000.0)));
  for (double b : {1.5, 2.0, 3.0})
    for (int i = 1; i < 100; ++i) {
      const double x = i / 100.0;
      squared = std::max(squared, std::abs(li(b, x) + li(b, -x) - std::pow(2.0, 1.0 - b) * li(b, x * x)));
    }
  for (double x : {2.0, 10.0, 100.0})
    inversion = std::max(inversion, std::abs(ti2(x) - ti2(1.0 / x) - 0.5 * kPi * std::log(x)));
  auto f = [](double l) { return ti2(l) - std::log(l) * std::atan(l); };
  for (double l = 1e-4; l < 1e4; l *= 1.2) symmetry = std::max(symmetry, std::abs(f(l) - f(1.0 / l)));
  const bool pass = atanh_add <= 1e-12 && arctan <= 1e-14 && reflection <= 1e-10 && squared <= 1e-10 &&
                    inversion <= 1e-12 && symmetry <= 1e-11;
  return {pass, "atanh addition " + num(atanh_add) + ", arctan inversion " + num(arctan) + ", dilog reflection " +
                    num(reflection) + ", Li squared " + num(squared) + ", Ti2 inversion " + num(inversion) +
                    ", f(l)=f(1/l) " + num(symmetry)};
}

Outcome one_stability() {
  const std::uint64_t n = 100000;
  const double critical = verify::ks_critical_1pct(n);
  CounterRng weights({kSeed.seed, 2});
  double worst = 0.0;
  for (int v = 0; v < 10; ++v) {
    const std::size_t d = 1 + static_cast<std::size_t>(weights.next_u64() % 50);
    std::vector<double> w(d);
    double norm = 0.0;
    for (double& x : w) {
      x = std::tan(kPi * (weights.next_open_uniform() - 0.5));
      norm += std::abs(x);
    }
    CounterRng rng({kSeed.seed, 100 + static_cast<std::uint64_t>(v)});
    std::vector<double> s(n);
    for (double& x : s) x = std::abs(stable_combination(w, rng)) / norm;
    worst = std::max(worst, verify::ks_statistic(std::move(s), [](double t) { return cdf_abs(t); }));
  }
  return {worst < critical, "max KS over 10 weight vectors = " + num(worst) + " (< " + num(critical) + ")"};
}

Outcome tail_domination() {
  const std::uint64_t n = 1000000;
  bool pass = true;
  int cells = 0;
  double worst_exact = -INFINITY, worst_mc_z = -INFINITY;
  for (double lam : {0.1, 1.0, 10.0}) {
    const std::vector<double> draws = kernels::parallel::abs_draws(n, {kSeed.seed, 3});
    std::vector<double> ys(n);
    for (std::uint64_t i = 0; i < n; ++i) ys[i] = xi(lam * draws[i]);
    std::sort(ys.begin(), ys.end());
    const double t0 = std::max(2.0, 2.0 * std::log1p(std::sqrt(lam)));
    for (double t = t0; t <= t0 + 14.0; t += 0.5) {
      const double bound = xi_tail_bound(lam, t);
      worst_exact = std::max(worst_exact, xi_survival_exact(lam, t) - bound);
      pass = pass && xi_survival_exact(lam, t) <= bound && xi_survival_dominating(lam, t) <= bound;
      const auto hits = static_cast<std::uint64_t>(ys.end() - std::upper_bound(ys.begin(), ys.end(), t));
      const verify::CaseResult c = verify::make_frequency_case("tail", "", bound, hits, n);
      pass = pass && c.pass;
      if (c.std_error > 0) worst_mc_z = std::max(worst_mc_z, c.residual / c.std_error);
      ++cells;
    }
  }
  return {pass, std::to_string(cells) + " (lambda, t) cells; max(exact - bound) = " + num(worst_exact) +
                    ", max (empirical - bound)/SE = " + num(worst_mc_z) + " (<= 3), n = 1e6"};
}

Outcome deviation_sandwich() {
  bool pass = true;
  double worst_upper = -INFINITY, worst_lower = -INFINITY;
  for (double a : {1.05, 1.1, 1.25})
    for (double lam : {1.0 / std::sqrt(a), 1.0, 5.0, 100.0}) {
      const double inc = mu_increment(a, lam);
      const double hi = a - 1.0;
      const double lo = (a - 1.0) / 4.0 * (1.0 - (a - 1.0));
      pass = pass && inc < hi - 1e-12 && inc > lo + 1e-12;
      worst_upper = std::max(worst_upper, inc - hi);
      worst_lower = std::max(worst_lower, lo - inc);
    }
  return {pass, "max(inc - (a-1)) = " + num(worst_upper) + ", max(lower - inc) = " + num(worst_lower) +
                    " (both < -1e-12) over 12 (a, lambda)"};
}

Outcome desk_concentration() {
  const ChernoffPlan plan = plan_dimension_for_delta(0.25, 1e-2);
  bool pass = true;
  std::string detail;
  for (double lam : {2.0, 0.1}) {
    const std::uint64_t k = verify::empirical_k_search(lam, 0.25, 0.01, kSeed);
    const verify::ConcentrationTrial t = verify::run_concentration_trial(lam, 0.25, k, 1000, kSeed);
    pass = pass && t.failure_fraction() <= 0.01 && k <= plan.k;
    detail += "lambda=" + num(lam) + " (" + std::string(regime_name(t.regime)) + "): k=" + std::to_string(k) +
              " fail=" + num(t.failure_fraction()) + "; ";
  }
  return {pass, detail + "plan k = " + std::to_string(plan.k) + " at delta = 1e-2"};
}

Outcome max_bound() {
  bool pass = true;
  std::string detail;
  for (auto [k, delta] : {std::pair<std::uint64_t, double>{100, 0.01}, {1000, 0.001}}) {
    const verify::CaseResult c = verify::verify_max_bound(k, 1.0, delta, 10000, kSeed);
    pass = pass && c.pass;
    detail += "k=" + std::to_string(k) + " delta=" + num(delta) + ": exceedance " + num(c.oracle) + " (<= " +
              num(delta + 3 * c.std_error) + ")";
    if (k == 100) detail += "; ";
  }
  return {pass, detail};
}

Outcome metric_axioms() {
  CounterRng rng({kSeed.seed, 4});
  double triangle = -INFINITY, symmetry = 0.0, identity = 0.0;
  bool positive = true;
  for (std::size_t k : {1u, 7u, 64u})
    for (int t = 0; t < 1000; ++t) {
      std::vector<double> x(k), y(k), z(k);
      for (std::size_t i = 0; i < k; ++i) {
        x[i] = sample_standard_cauchy(rng).value;
        y[i] = sample_standard_cauchy(rng).value;
        z[i] = sample_standard_cauchy(rng).value;
      }
      triangle = std::max(triangle, rho(x, z) - rho(x, y) - rho(y, z));
      symmetry = std::max(symmetry, std::abs(rho(x, y) - rho(y, x)));
      identity = std::max(identity, rho(x, x));
      positive = positive && rho(x, y) > 0.0;
    }
  double subadd = -INFINITY;
  for (int i = 0; i <= 400; ++i)
    for (int j = 0; j <= 400; ++j) {
      const double a = std::pow(10.0, -8.0 + 16.0 * i / 400.0);
      const double b = std::pow(10.0, -8.0 + 16.0 * j / 400.0);
      subadd = std::max(subadd, xi(a + b) - xi(a) - xi(b));
    }
  bool envelope = true;
  for (int i = 1; i < 100000; ++i) {
    const double a = i / 100000.0 / 6.0;
    const auto [lo, hi] = xi_small_envelope(a);
    envelope = envelope && lo <= xi(a) && xi(a) <= hi;
  }
  const bool pass = triangle <= 1e-12 && symmetry == 0.0 && identity == 0.0 && positive && subadd <= 1e-14 && envelope;
  return {pass, "max triangle excess " + num(triangle) + ", symmetry " + num(symmetry) + ", identity " +
                    num(identity) + " on 3e3 triples; max xi subadditivity excess " + num(subadd) +
                    "; envelope " + (envelope ? "holds" : "violated") + " on 1e5 points"};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "cauchy_sketch_acceptance";
  fs::create_directories(dir);
  {
    std::ofstream f(dir / "points.csv");
    CounterRng rng({kSeed.seed, 5});
    f << "x0,x1,x2,x3,x4\n";
    for (int i = 0; i < 20; ++i) {
      for (int j = 0; j < 5; ++j) f << (j ? "," : "") << rng.next_open_uniform() * 10.0 - 5.0;
      f << '\n';
    }
  }
  std::string outputs[2], metas[2];
  bool ran = true;
  for (int r = 0; r < 2; ++r) {
    const fs::path out = dir / ("run" + std::to_string(r) + ".bin");
    const std::string cmd = std::string("\"") + CAUCHY_SKETCH_EXE + "\" sketch --input \"" +
                            (dir / "points.csv").string() + "\" --output \"" + out.string() +
                            "\" --epsilon 0.25 --c 3 --seed 99 --stream 3 > /dev/null";
    ran = ran && std::system(cmd.c_str()) == 0;
    outputs[r] = slurp(out);
    metas[r] = slurp(fs::path(out.string() + ".meta.json"));
  }
  fs::remove_all(dir);
  const bool identical = ran && !outputs[0].empty() && outputs[0] == outputs[1] && metas[0] == metas[1];

  CounterRng rng({kSeed.seed, 6});
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double lam = std::pow(10.0, -6.0 + 12.0 * rng.next_open_uniform());
    worst = std::max(worst, std::abs(mu_inverse(mu(lam)) - lam) / lam);
  }
  return {identical && worst <= 1e-10, std::string("sketch rerun ") + (identical ? "byte-identical" : "DIFFERS") +
                                           " (" + std::to_string(outputs[0].size()) +
                                           " bytes); max mu_inverse relative error " + num(worst) + " over 1e3 lambda"};
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;  // 0: no runtime limit stated
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "moment closed forms vs quadrature", 10, moments_vs_quadrature},
      {2, "variance and second-moment ratio bounds", 0, variance_bound},
      {3, "special-function identities", 5, identities},
      {4, "1-stability KS", 10, one_stability},
      {5, "xi tail domination", 30, tail_domination},
      {6, "deviation sandwich", 0, deviation_sandwich},
      {7, "desk-scale concentration vs planner", 120, desk_concentration},
      {8, "max of iid Cauchy bound", 30, max_bound},
      {9, "metric axioms and xi envelope", 0, metric_axioms},
      {10, "end-to-end determinism", 0, determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.limit_s == 0 || secs < c.limit_s;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::printf("[%s] %2d %s: %s; %.2f s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs,
                c.limit_s > 0 ? (" (limit " + num(c.limit_s) + " s)").c_str() : "");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}

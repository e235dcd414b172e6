#include "cauchy_sketch/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cauchy_sketch/concentration.hpp"
#include "cauchy_sketch/errors.hpp"
#include "cauchy_sketch/io.hpp"
#include "cauchy_sketch/kernels.hpp"
#include "cauchy_sketch/metric.hpp"
#include "cauchy_sketch/moments.hpp"
#include "cauchy_sketch/sketch.hpp"
#include "cauchy_sketch/verify.hpp"
#include "cauchy_sketch/version.hpp"

namespace cauchy_sketch {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Options {
  double epsilon = 0.25;
  double c = 3.0;
  std::uint64_t n = 0;
  std::optional<std::uint64_t> k;
  std::optional<std::uint64_t> seed;
  std::uint64_t stream = 0;
  std::string input;
  std::string output;
  std::string suite = "all";
  std::optional<std::uint64_t> trials;
  std::optional<std::string> format;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

fs::path sidecar_path(const fs::path& sketch) { return fs::path(sketch.string() + ".meta.json"); }

std::optional<std::uint64_t> resolve_seed(const Options& o) {
  if (o.seed) return o.seed;
  if (const char* env = std::getenv("CAUCHY_SKETCH_SEED")) {
    std::uint64_t v = 0;
    const std::string s(env);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
      throw UsageError("CAUCHY_SKETCH_SEED is not an unsigned 64-bit integer: " + s);
    return v;
  }
  return std::nullopt;
}

io::Format input_format(const Options& o) {
  if (!o.format) return io::guess_format(o.input);
  return *o.format == "csv" ? io::Format::csv : io::Format::bin;
}

json plan_json(const ChernoffPlan& p, std::uint64_t n, double c) {
  return {
      {"epsilon", p.epsilon},
      {"n", n},
      {"c", c},
      {"rate_large_upper", p.rate_large_upper},
      {"rate_large_lower", p.rate_large_lower},
      {"rate_small_upper", p.rate_small_upper},
      {"rate_small_lower_mid", p.rate_small_lower_mid},
      {"rate_really_small_lower", p.rate_really_small},
      {"rate_really_small_upper", "unproven"},
      {"rate_reciprocal_upper", p.rate_reciprocal_upper},
      {"rate_reciprocal_lower", p.rate_reciprocal_lower},
      {"attained", source_name(p.attained)},
      {"u_star_upper", p.u_star_upper},
      {"u_star_lower", p.u_star_lower},
      {"delta", p.delta_fail},
      {"log_two_over_delta", p.log_two_over_delta},
      {"lambda0", p.lambda0},
      {"fixed_point_iterations", p.fixed_point_iterations},
      {"k", p.k},
  };
}

int cmd_plan(const Options& o, std::ostream& out) {
  if (o.n == 0) throw UsageError("plan: --n is required");
  const ChernoffPlan p = plan_dimension(o.epsilon, o.n, o.c);
  const json j = plan_json(p, o.n, o.c);
  out << std::setprecision(10);
  for (const auto& [key, value] : j.items()) out << key << " = " << value.dump() << '\n';
  if (!o.output.empty()) {
    std::ofstream f(o.output);
    if (!f) throw IoError("cannot write " + o.output);
    f << j.dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_sketch(const Options& o, std::ostream& out) {
  if (o.input.empty() || o.output.empty()) throw UsageError("sketch: --input and --output are required");
  const io::Matrix data = io::read_matrix(o.input, input_format(o));
  SketchConfig cfg;
  cfg.epsilon = o.epsilon;
  cfg.c = o.c;
  cfg.n_points = data.rows;
  cfg.k_override = o.k;
  if (o.n != 0 && o.n != data.rows)
    throw UsageError("sketch: --n does not match the number of input rows");
  if (data.rows < 2 && !o.k) throw UsageError("sketch: planning k needs at least two points; pass --k");
  const RngSeed seed{resolve_seed(o).value_or(0), o.stream};
  const SketchResult r = sketch_dataset(data.to_rows(), cfg, seed);

  io::Matrix sk;
  sk.rows = data.rows;
  sk.cols = r.matrix.k();
  sk.values.reserve(sk.rows * sk.cols);
  for (const SketchedPoint& p : r.sketches) sk.values.insert(sk.values.end(), p.coords().begin(), p.coords().end());
  io::write_matrix_binary(o.output, sk);

  const json meta = {
      {"k", sk.cols},
      {"d", data.cols},
      {"n", data.rows},
      {"seed", seed.seed},
      {"stream", seed.stream_id},
      {"generator", CounterRng::kName},
      {"epsilon", o.epsilon},
      {"c", o.c},
      {"version", kVersion},
  };
  std::ofstream f(sidecar_path(o.output), std::ios::binary);
  if (!f) throw IoError("cannot write " + sidecar_path(o.output).string());
  f << meta.dump(2) << '\n';
  if (!f) throw IoError("write failed: " + sidecar_path(o.output).string());
  out << "wrote " << sk.rows << " sketches of dimension " << sk.cols << " to " << o.output << '\n';
  return kExitOk;
}

int cmd_estimate(const Options& o, std::ostream& out) {
  if (o.input.empty()) throw UsageError("estimate: --input is required");
  const fs::path meta_path = sidecar_path(o.input);
  std::ifstream mf(meta_path);
  if (!mf) throw IoError("missing sketch metadata " + meta_path.string());
  json meta;
  try {
    meta = json::parse(mf);
  } catch (const json::exception& e) {
    throw IoError("malformed metadata " + meta_path.string() + ": " + e.what());
  }
  const io::Matrix sk = io::read_matrix(o.input, io::Format::bin);
  if (!meta.contains("k") || meta["k"].get<std::uint64_t>() != sk.cols || meta["n"].get<std::uint64_t>() != sk.rows)
    throw IoError("metadata does not match sketch " + o.input);
  const double eps = meta.value("epsilon", o.epsilon);
  const std::vector<double> rhos = kernels::parallel::pairwise_rho(sk.values, sk.rows, sk.cols);

  std::ostringstream table;
  table << std::setprecision(17) << "i,j,rho,l1,regime\n";
  std::size_t idx = 0;
  for (std::uint64_t i = 0; i < sk.rows; ++i)
    for (std::uint64_t j = i + 1; j < sk.rows; ++j, ++idx) {
      const double l1 = rhos[idx] > 0.0 ? mu_inverse(rhos[idx]) : 0.0;
      const std::string_view tag = l1 > 0.0 ? regime_name(classify_scale(l1, eps).kind) : "identical";
      table << i << ',' << j << ',' << rhos[idx] << ',' << l1 << ',' << tag << '\n';
    }
  if (o.output.empty()) {
    out << table.str();
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f || !(f << table.str())) throw IoError("cannot write " + o.output);
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (!verify::is_suite(o.suite)) throw UsageError("unknown suite: " + o.suite);
  verify::SuiteOptions so;
  so.seed = {resolve_seed(o).value_or(so.seed.seed), o.stream};
  so.trials = o.trials;
  const verify::VerificationReport report = verify::run_suite(o.suite, so);
  if (!o.output.empty()) {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw IoError("cannot write " + o.output);
    verify::write_jsonl(f, report);
  }
  verify::print_summary(out, report);
  return report.passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cauchy projections for l1 distances: plan, sketch, estimate, verify", "cauchy-sketch"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1, 1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--epsilon", o.epsilon, "Distortion epsilon in (0, 1/4]")->capture_default_str();
    sub->add_option("--c", o.c, "Failure exponent c >= 3")->capture_default_str();
    sub->add_option("--seed", o.seed, "64-bit seed (default: $CAUCHY_SKETCH_SEED, else 0)");
    sub->add_option("--stream", o.stream, "Stream id within the seed")->capture_default_str();
    sub->add_option("--output", o.output, "Output path");
  };

  CLI::App* plan = app.add_subcommand("plan", "Target dimension k for N points");
  add_common(plan);
  plan->add_option("--n", o.n, "Number of points N");

  CLI::App* sketch = app.add_subcommand("sketch", "Project a dataset; writes <output> and <output>.meta.json");
  add_common(sketch);
  sketch->add_option("--n", o.n, "Expected number of points (checked against the input)");
  sketch->add_option("--k", o.k, "Target dimension; overrides the planner")->check(CLI::PositiveNumber);
  sketch->add_option("--input", o.input, "Dataset (CSV or binary)");
  sketch->add_option("--format", o.format, "Input format")->check(CLI::IsMember({"csv", "bin"}));

  CLI::App* estimate = app.add_subcommand("estimate", "Pairwise l1 estimates from a sketch file");
  add_common(estimate);
  estimate->add_option("--input", o.input, "Sketch written by `sketch`");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  add_common(verify_cmd);
  verify_cmd->add_option("--suite", o.suite, "Suite name")->capture_default_str();
  verify_cmd->add_option("--trials", o.trials, "Monte Carlo sample count override (0 skips)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_out, o_err;
    const int code = app.exit(e, o_out, o_err);
    out << o_out.str();
    err << o_err.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (plan->parsed()) return cmd_plan(o, out);
    if (sketch->parsed()) return cmd_sketch(o, out);
    if (estimate->parsed()) return cmd_estimate(o, out);
    return cmd_verify(o, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace cauchy_sketch

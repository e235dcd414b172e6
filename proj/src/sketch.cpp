#include "cauchy_sketch/sketch.hpp"

#include <string>

#include "cauchy_sketch/errors.hpp"
#include "cauchy_sketch/kernels.hpp"
#include "cauchy_sketch/moments.hpp"

namespace cauchy_sketch {

ProjectionMatrix build_projection(std::size_t k, std::size_t d, RngSeed seed, std::uint64_t entry_budget) {
  if (k < 1 || d < 1) throw DomainError("build_projection: requires k, d >= 1");
  if (k > entry_budget / d)
    throw BudgetExceeded("build_projection: " + std::to_string(k) + " x " + std::to_string(d) +
                         " exceeds the entry budget of " + std::to_string(entry_budget));
  std::vector<double> entries(k * d);
  kernels::parallel::fill_cauchy(entries, seed, 0);
  return ProjectionMatrix(k, d, seed, std::move(entries));
}

SketchedPoint project(const ProjectionMatrix& m, std::span<const double> v) {
  if (v.size() != m.d())
    throw DimensionMismatch("project: point has dimension " + std::to_string(v.size()) +
                            ", matrix expects " + std::to_string(m.d()));
  std::vector<double> out(m.k());
  kernels::parallel::project_batch(m.entries(), m.k(), m.d(), v, 1, out);
  return SketchedPoint(std::move(out));
}

double estimate_l1(const SketchedPoint& u, const SketchedPoint& v) { return mu_inverse(rho(u, v)); }

L1Estimate estimate_l1_classified(const SketchedPoint& u, const SketchedPoint& v, double epsilon) {
  const double r = rho(u, v);
  const double l1 = mu_inverse(r);
  return {r, l1, classify_scale(l1, epsilon).kind};
}

std::uint64_t resolve_k(const SketchConfig& cfg) {
  if (cfg.k_override) {
    if (*cfg.k_override < 1) throw DomainError("resolve_k: k override must be >= 1");
    return *cfg.k_override;
  }
  return plan_dimension(cfg.epsilon, cfg.n_points, cfg.c).k;
}

SketchResult sketch_dataset(const std::vector<std::vector<double>>& points, const SketchConfig& cfg,
                            RngSeed seed, std::uint64_t entry_budget) {
  if (points.empty()) throw DimensionMismatch("sketch_dataset: empty point set");
  if (points.size() != cfg.n_points)
    throw DimensionMismatch("sketch_dataset: config expects " + std::to_string(cfg.n_points) +
                            " points, got " + std::to_string(points.size()));
  const std::size_t d = points.front().size();
  for (const auto& p : points)
    if (p.size() != d) throw DimensionMismatch("sketch_dataset: ragged input");

  const std::size_t k = resolve_k(cfg);
  ProjectionMatrix matrix = build_projection(k, d, seed, entry_budget);

  std::vector<double> flat;
  flat.reserve(points.size() * d);
  for (const auto& p : points) flat.insert(flat.end(), p.begin(), p.end());
  std::vector<double> out(points.size() * k);
  kernels::parallel::project_batch(matrix.entries(), k, d, flat, points.size(), out);

  std::vector<SketchedPoint> sketches;
  sketches.reserve(points.size());
  for (std::size_t p = 0; p < points.size(); ++p)
    sketches.emplace_back(std::vector<double>(out.begin() + p * k, out.begin() + (p + 1) * k));
  return {std::move(matrix), std::move(sketches)};
}

}  // namespace cauchy_sketch

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cauchy_sketch/concentration.hpp"
#include "cauchy_sketch/metric.hpp"
#include "cauchy_sketch/rng.hpp"

namespace cauchy_sketch {

inline constexpr std::uint64_t kDefaultEntryBudget = std::uint64_t{1} << 31;

/// k x d matrix of iid standard Cauchy entries, row-major. Entry (i, j) is
/// draw number i * d + j of the seeded stream. Immutable once built.
class ProjectionMatrix {
 public:
  std::size_t k() const { return k_; }
  std::size_t d() const { return d_; }
  const RngSeed& seed() const { return seed_; }
  double at(std::size_t i, std::size_t j) const { return entries_[i * d_ + j]; }
  std::span<const double> row(std::size_t i) const { return {entries_.data() + i * d_, d_}; }
  std::span<const double> entries() const { return entries_; }

 private:
  friend ProjectionMatrix build_projection(std::size_t, std::size_t, RngSeed, std::uint64_t);
  ProjectionMatrix(std::size_t k, std::size_t d, RngSeed seed, std::vector<double> entries)
      : k_(k), d_(d), seed_(seed), entries_(std::move(entries)) {}

  std::size_t k_;
  std::size_t d_;
  RngSeed seed_;
  std::vector<double> entries_;
};

struct SketchConfig {
  double epsilon = 0.25;
  double c = 3.0;
  std::uint64_t n_points = 2;
  std::optional<std::uint64_t> k_override;
};

/// Distance estimate between two sketches and the scale it falls in.
struct L1Estimate {
  double rho;
  double l1;
  ScaleRegime::Kind regime;
};

ProjectionMatrix build_projection(std::size_t k, std::size_t d, RngSeed seed,
                                  std::uint64_t entry_budget = kDefaultEntryBudget);

SketchedPoint project(const ProjectionMatrix& m, std::span<const double> v);

/// mu^{-1}(rho(u, v)): the l1 distance whose expected target distance equals rho.
double estimate_l1(const SketchedPoint& u, const SketchedPoint& v);

/// estimate_l1 plus the regime of the estimated scale under `epsilon`.
L1Estimate estimate_l1_classified(const SketchedPoint& u, const SketchedPoint& v, double epsilon);

/// The target dimension for `cfg`: k_override if set, otherwise the planner's k.
std::uint64_t resolve_k(const SketchConfig& cfg);

struct SketchResult {
  ProjectionMatrix matrix;
  std::vector<SketchedPoint> sketches;
};

SketchResult sketch_dataset(const std::vector<std::vector<double>>& points, const SketchConfig& cfg,
                            RngSeed seed, std::uint64_t entry_budget = kDefaultEntryBudget);

}  // namespace cauchy_sketch

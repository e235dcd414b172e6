#pragma once

// Per-element bodies shared by the serial and OpenMP kernels.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>

#include "cauchy_sketch/cauchy.hpp"
#include "cauchy_sketch/metric.hpp"
#include "cauchy_sketch/rng.hpp"

namespace cauchy_sketch::kernels::detail {

inline double dot(const double* row, const double* v, std::size_t n) {
  double s = 0.0;
  for (std::size_t j = 0; j < n; ++j) s += row[j] * v[j];
  return s;
}

inline double trial_mean(double lambda, std::uint64_t k, RngSeed stream) {
  const CounterRng rng(stream);
  double s = 0.0;
  for (std::uint64_t i = 0; i < k; ++i) s += xi(lambda * std::abs(cauchy_at(rng, i)));
  return s / static_cast<double>(k);
}

inline double trial_max(std::uint64_t k, RngSeed stream) {
  const CounterRng rng(stream);
  double m = 0.0;
  for (std::uint64_t i = 0; i < k; ++i) m = std::max(m, std::abs(cauchy_at(rng, i)));
  return m;
}

// Start of row i in the flattened strict upper triangle of an n x n array.
inline std::size_t pair_offset(std::size_t i, std::size_t n) { return i * (2 * n - i - 1) / 2; }

inline void check_batch(std::size_t matrix_size, std::size_t rows, std::size_t cols,
                        std::size_t points_size, std::size_t n, std::size_t out_size) {
  if (matrix_size != rows * cols || points_size != n * cols || out_size != n * rows)
    throw std::invalid_argument("project_batch: buffer sizes do not match the shapes");
}

}  // namespace cauchy_sketch::kernels::detail

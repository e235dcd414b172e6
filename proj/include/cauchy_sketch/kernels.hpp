#pragma once

// Data-parallel inner loops. Every kernel exists twice: a plain serial
// reference and an OpenMP version. Each output element is computed by exactly
// one thread in the same order as the serial loop, so both produce
// bit-identical results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cauchy_sketch/rng.hpp"

namespace cauchy_sketch::kernels {

/// Stream used by Monte Carlo trial `t` under base seed `base`.
RngSeed trial_stream(RngSeed base, std::uint64_t t);

namespace serial {

/// out[i] = standard Cauchy draw number first_index + i of the stream.
void fill_cauchy(std::span<double> out, RngSeed seed, std::uint64_t first_index);

/// Row-major (rows x cols) matrix applied to n row-major points -> n x rows.
void project_batch(std::span<const double> matrix, std::size_t rows, std::size_t cols,
                   std::span<const double> points, std::size_t n, std::span<double> out);

/// Per trial: (1/k) sum_i xi(lambda |X_i|) over the first k draws of the trial stream.
std::vector<double> trial_means(double lambda, std::uint64_t k, std::uint64_t trials, RngSeed base);

/// Per trial: max_i |X_i| over the first k draws of the trial stream.
std::vector<double> trial_max_abs(std::uint64_t k, std::uint64_t trials, RngSeed base);

/// |X| for n draws of one stream, in stream order.
std::vector<double> abs_draws(std::uint64_t n, RngSeed seed);

/// rho for all pairs i < j of n row-major sketches of width k,
/// ordered (0,1), (0,2), ..., (1,2), ...
std::vector<double> pairwise_rho(std::span<const double> sketches, std::size_t n, std::size_t k);

}  // namespace serial

namespace parallel {

void fill_cauchy(std::span<double> out, RngSeed seed, std::uint64_t first_index);
void project_batch(std::span<const double> matrix, std::size_t rows, std::size_t cols,
                   std::span<const double> points, std::size_t n, std::span<double> out);
std::vector<double> trial_means(double lambda, std::uint64_t k, std::uint64_t trials, RngSeed base);
std::vector<double> trial_max_abs(std::uint64_t k, std::uint64_t trials, RngSeed base);
std::vector<double> abs_draws(std::uint64_t n, RngSeed seed);
std::vector<double> pairwise_rho(std::span<const double> sketches, std::size_t n, std::size_t k);

int max_threads();

}  // namespace parallel

}  // namespace cauchy_sketch::kernels

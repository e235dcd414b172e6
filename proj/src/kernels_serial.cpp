#include "cauchy_sketch/kernels.hpp"
#include "kernel_detail.hpp"

namespace cauchy_sketch::kernels {

RngSeed trial_stream(RngSeed base, std::uint64_t t) {
  return {base.seed, mix64(base.stream_id) + t};
}

namespace serial {

void fill_cauchy(std::span<double> out, RngSeed seed, std::uint64_t first_index) {
  const CounterRng rng(seed);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = cauchy_at(rng, first_index + i);
}

void project_batch(std::span<const double> matrix, std::size_t rows, std::size_t cols,
                   std::span<const double> points, std::size_t n, std::span<double> out) {
  detail::check_batch(matrix.size(), rows, cols, points.size(), n, out.size());
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t i = 0; i < rows; ++i)
      out[p * rows + i] = detail::dot(&matrix[i * cols], &points[p * cols], cols);
}

std::vector<double> trial_means(double lambda, std::uint64_t k, std::uint64_t trials, RngSeed base) {
  std::vector<double> means(trials);
  for (std::uint64_t t = 0; t < trials; ++t)
    means[t] = detail::trial_mean(lambda, k, trial_stream(base, t));
  return means;
}

std::vector<double> trial_max_abs(std::uint64_t k, std::uint64_t trials, RngSeed base) {
  std::vector<double> maxima(trials);
  for (std::uint64_t t = 0; t < trials; ++t) maxima[t] = detail::trial_max(k, trial_stream(base, t));
  return maxima;
}

std::vector<double> abs_draws(std::uint64_t n, RngSeed seed) {
  const CounterRng rng(seed);
  std::vector<double> out(n);
  for (std::uint64_t i = 0; i < n; ++i) out[i] = std::abs(cauchy_at(rng, i));
  return out;
}

std::vector<double> pairwise_rho(std::span<const double> sketches, std::size_t n, std::size_t k) {
  if (sketches.size() != n * k) throw std::invalid_argument("pairwise_rho: buffer size mismatch");
  std::vector<double> out(n < 2 ? 0 : n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t base = detail::pair_offset(i, n);
    for (std::size_t j = i + 1; j < n; ++j)
      out[base + (j - i - 1)] = rho(sketches.subspan(i * k, k), sketches.subspan(j * k, k));
  }
  return out;
}

}  // namespace serial
}  // namespace cauchy_sketch::kernels

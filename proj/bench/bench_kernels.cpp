// Serial reference kernels against their OpenMP counterparts.
#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include "cauchy_sketch/kernels.hpp"

namespace ck = cauchy_sketch::kernels;

namespace {

double time_ms(const std::function<void()>& f, int reps = 3) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-16s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx\n", name, serial, parallel,
              serial / parallel);
}

}  // namespace

int main() {
  const cauchy_sketch::RngSeed seed{7, 0};
  std::printf("threads: %d\n", ck::parallel::max_threads());

  std::vector<double> buf(1 << 22);
  row("fill_cauchy", time_ms([&] { ck::serial::fill_cauchy(buf, seed, 0); }),
      time_ms([&] { ck::parallel::fill_cauchy(buf, seed, 0); }));

  row("trial_means", time_ms([&] { ck::serial::trial_means(2.0, 4000, 500, seed); }),
      time_ms([&] { ck::parallel::trial_means(2.0, 4000, 500, seed); }));

  const std::size_t k = 512, d = 1024, n = 64;
  std::vector<double> matrix(k * d), points(n * d), out(n * k);
  ck::parallel::fill_cauchy(matrix, seed, 0);
  ck::parallel::fill_cauchy(points, {8, 0}, 0);
  row("project_batch", time_ms([&] { ck::serial::project_batch(matrix, k, d, points, n, out); }),
      time_ms([&] { ck::parallel::project_batch(matrix, k, d, points, n, out); }));

  std::vector<double> sketches(256 * k);
  ck::parallel::fill_cauchy(sketches, {9, 0}, 0);
  row("pairwise_rho", time_ms([&] { ck::serial::pairwise_rho(sketches, 256, k); }),
      time_ms([&] { ck::parallel::pairwise_rho(sketches, 256, k); }));
  return 0;
}

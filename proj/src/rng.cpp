#include "cauchy_sketch/rng.hpp"

namespace cauchy_sketch {

namespace {
constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
constexpr double kTwoPowMinus53 = 1.0 / 9007199254740992.0;
}  // namespace

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

CounterRng::CounterRng(RngSeed seed)
    : seed_(seed), key_(mix64(seed.seed ^ mix64(seed.stream_id + kGamma))) {}

std::uint64_t CounterRng::word_at(std::uint64_t index) const {
  return mix64(key_ + (index + 1) * kGamma);
}

double CounterRng::open_uniform_at(std::uint64_t index) const {
  std::uint64_t w = word_at(index);
  // 53-bit mantissa draws land in [0, 1); only exact 0 needs a redraw.
  while ((w >> 11) == 0) w = mix64(w + kGamma);
  return static_cast<double>(w >> 11) * kTwoPowMinus53;
}

}  // namespace cauchy_sketch

#pragma once

#include <cstdint>
#include <string_view>

namespace cauchy_sketch {

/// Identifies one reproducible random stream.
struct RngSeed {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;

  friend bool operator==(const RngSeed&, const RngSeed&) = default;
};

/// Counter-based generator: word n of a stream is a fixed bijective hash of
/// (stream key, n). Any draw can be addressed directly, so a stream can be
/// split across threads without changing its contents.
///
/// The construction is SplitMix64 evaluated at counter positions; the stream
/// key itself is a SplitMix64 mix of (seed, stream_id).
class CounterRng {
 public:
  static constexpr std::string_view kName = "splitmix64-counter/v1";

  explicit CounterRng(RngSeed seed);

  /// Next 64-bit word, advancing the counter.
  std::uint64_t next_u64() { return word_at(counter_++); }

  /// Uniform on the open interval (0, 1), advancing the counter by one.
  double next_open_uniform() { return open_uniform_at(counter_++); }

  /// Word number `index` of this stream, without touching the counter.
  std::uint64_t word_at(std::uint64_t index) const;

  /// Uniform on (0, 1) derived from word `index`. A word that maps to 0 is
  /// rehashed deterministically until it does not.
  double open_uniform_at(std::uint64_t index) const;

  std::uint64_t position() const { return counter_; }
  void seek(std::uint64_t index) { counter_ = index; }
  RngSeed seed() const { return seed_; }

 private:
  RngSeed seed_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t mix64(std::uint64_t z);

}  // namespace cauchy_sketch

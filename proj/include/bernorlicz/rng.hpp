#pragma once

// Counter-based random numbers: a pure function of (seed, stream, index)
// built from the standard splitmix64 output mixer, so that parallel
// replicates own disjoint substreams and any worker count reproduces the
// same values bit for bit.  Test vectors live in tests/test_rng.cpp.

#include <cstdint>

namespace bernorlicz {

namespace detail {
inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}
}  // namespace detail

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  // stream < 2^32 and index < 2^32 address disjoint counters.
  std::uint64_t word(std::uint64_t stream, std::uint64_t index) const {
    const std::uint64_t ctr = (stream << 32) + index;
    return detail::mix64(seed_ + (ctr + 1) * detail::kGolden);
  }

  // Uniform on the open interval (0,1); safe for inverse-CDF sampling.
  double uniform01(std::uint64_t stream, std::uint64_t index) const {
    return (word(stream, index) >> 11) * 0x1.0p-53 + 0x1.0p-54;
  }

 private:
  std::uint64_t seed_;
};

// Sequential view of one substream.
class SubStream {
 public:
  SubStream(const CounterRng& rng, std::uint64_t stream)
      : rng_(&rng), stream_(stream) {}
  double next_uniform() { return rng_->uniform01(stream_, index_++); }
  std::uint64_t next_word() { return rng_->word(stream_, index_++); }

 private:
  const CounterRng* rng_;
  std::uint64_t stream_;
  std::uint64_t index_ = 0;
};

}  // namespace bernorlicz

#pragma once

#include <cstdint>

namespace cgrdst {

// splitmix64: 64-bit splittable generator (Steele, Lea, Flood 2014).
// Used everywhere randomness is needed so that runs are reproducible
// across builds; the algorithm name is recorded in experiment output.
class SplitMix64 {
 public:
  static constexpr const char* kAlgorithmName = "splitmix64";

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) {
    // Modulo bias is below 2^-53 for the n used here (n <= 2^32).
    return next_u64() % n;
  }

 private:
  std::uint64_t state_;
};

// Derives an independent stream seed from (base, index); used for
// per-replicate seeding so results do not depend on execution order.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
  SplitMix64 g(base ^ (0xD1B54A32D192ED03ULL * (index + 1)));
  g.next_u64();
  return g.next_u64();
}

}  // namespace cgrdst

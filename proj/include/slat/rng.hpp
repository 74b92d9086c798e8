#pragma once

#include <cstdint>

namespace slat {

// splitmix64 (Steele, Lea, Flood 2014). Fixed constants, no platform
// dependence: seeds recorded in artifacts must replay bit-for-bit anywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n) by rejection; n > 0.
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t threshold = -n % n;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace slat

#pragma once

#include <cstdint>

namespace awcd {

// SplitMix64 (Steele, Lea & Flood 2014). A fixed, named algorithm so that
// seeded output is bit-identical across platforms and compilers; std::
// distributions are implementation-defined and must not be used for
// anything that ends up in a file.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53 random bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, bound), unbiased via rejection. bound must be > 0.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

// Seed for replicate `index` of an experiment with base seed `base`;
// equals the index-th output of SplitMix64 seeded at `base`.
inline std::uint64_t stream_seed(std::uint64_t base, std::uint64_t index) {
  SplitMix64 g(base + 0x9e3779b97f4a7c15ULL * index);
  return g.next_u64();
}

}  // namespace awcd

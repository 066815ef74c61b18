#pragma once

#include <cstdint>

namespace omlgal {

// Deterministic splitmix64 stream; identical output on every platform,
// so seeded sampling reports are byte-reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, n); n must be nonzero.
  std::uint64_t below(std::uint64_t n) {
    // Rejection sampling to avoid modulo bias.
    const std::uint64_t limit = n * ((~0ULL) / n);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

 private:
  std::uint64_t state_;
};

}  // namespace omlgal

#pragma once

#include <cstdint>

namespace fuzztop {

// splitmix64; implementation-defined std distributions are avoided so that
// seeded runs replay byte-identically across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n > 0.
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

  bool chance(int num, int den) { return below(den) < num; }

 private:
  std::uint64_t state_;
};

}  // namespace fuzztop

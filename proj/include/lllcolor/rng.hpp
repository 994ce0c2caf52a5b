#pragma once

// Seedable RNG with a fixed algorithm (std::mt19937_64) and a fixed draw
// discipline, so solve reports are bit-reproducible across platforms.
// Bounded draws use rejection sampling, not uniform_int_distribution,
// because the latter's output sequence is implementation-defined.

#include <cstdint>
#include <random>

namespace lllcolor {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform draw in [0, n). One or more engine steps; unbiased.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % n;
  }

  int color(int palette) { return static_cast<int>(below(static_cast<std::uint64_t>(palette))); }

  // Bernoulli(p) with 53-bit resolution.
  bool bernoulli(double p) {
    const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    return u < p;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace lllcolor

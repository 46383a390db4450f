#pragma once

#include <cstdint>
#include <random>

namespace ppc {

/// splitmix64 finalizer; the mixing step behind every derived stream.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/**
 * Seeded generator with platform-independent derived distributions.
 *
 * std::uniform_int_distribution is implementation-defined, so bounded
 * integers and Bernoulli draws are derived here from the raw mt19937_64
 * stream. Identical seeds give identical sequences on every toolchain.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

/**
 * Counter-based sample tape: entry `index` of the tape for variable `var`
 * is a pure function of (seed, var, index), so a tape behaves like a
 * pre-drawn vector that is only materialized as far as it is read.
 * Values are uniform in [1, domain].
 */
inline std::uint32_t tape_value(std::uint64_t seed, std::uint32_t var, std::uint64_t index, std::uint32_t domain) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % domain;
  std::uint64_t state = mix64(mix64(seed) ^ mix64((std::uint64_t{var} << 32) ^ 0x5bd1e995ULL)) ^ index;
  for (;;) {
    state = mix64(state);
    if (state < limit) return static_cast<std::uint32_t>(state % domain) + 1;
  }
}

}  // namespace ppc

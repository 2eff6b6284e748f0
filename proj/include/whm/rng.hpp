#pragma once

#include <cstdint>
#include <random>

namespace whm {

/// SplitMix64 finalizer; used to turn (seed, index) pairs into well-mixed
/// engine seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Seeded generator with a fully specified algorithm: std::mt19937_64 seeded
/// with splitmix64(seed); integers by rejection sampling and reals from the top
/// 53 bits, so sequences are identical on every platform (the std
/// distributions are not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  /// Independent stream number `index` of `seed`; trial t of a simulation
  /// uses substream(seed, t) so any partition of the trials reproduces the
  /// serial run.
  static Rng substream(std::uint64_t seed, std::uint64_t index) {
    return Rng(splitmix64(seed) ^ splitmix64(~index));
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, bound), bound >= 1.
  std::uint64_t uniform_below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x > limit);
    return x % bound;
  }

  /// Uniform on [0, 1).
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace whm

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>

namespace pahyper {

/// Seeded generator used by every stochastic routine.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. All derived draws (uniform reals, bounded integers, categorical
/// choices) are implemented here rather than through <random> distributions,
/// whose algorithms are implementation-defined. Same seed and same call
/// sequence therefore give the same values on every conforming toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  bool bernoulli(double p) { return uniform() < p; }

  /// Index drawn with the given (not necessarily normalized) weights.
  /// A single-outcome choice consumes no randomness.
  std::size_t categorical(std::span<const double> weights) {
    if (weights.size() <= 1) return 0;
    double total = 0.0;
    for (double w : weights) total += w;
    const double u = uniform() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      acc += weights[i];
      if (u < acc) return i;
    }
    // rounding left u at the very top; return the last positive weight
    for (std::size_t i = weights.size(); i-- > 0;) {
      if (weights[i] > 0.0) return i;
    }
    return weights.size() - 1;
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

/// Derives the seed of replica `index` from a base seed (splitmix64 step), so
/// neighbouring replicas get decorrelated streams.
inline std::uint64_t replica_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace pahyper

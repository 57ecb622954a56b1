// Seeded, splittable random source with a portable normal sampler.

#pragma once

#include <cstdint>
#include <random>

namespace orbitdim {

/// Every stochastic routine takes an explicit seed and builds one of these.
/// Child streams come from split(), so independent consumers never share state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Independent generator for sub-stream `stream`.
  Rng split(std::uint64_t stream) const;

  std::uint64_t seed() const { return seed_; }

  /// Uniform on [0, 1), 53 random bits.
  double uniform();
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal (Box-Muller; does not depend on the standard library's
  /// distribution implementations).
  double normal();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace orbitdim

/**
 * @file rng.hpp
 * @brief Seeded random source. Doubles are derived from raw 64-bit draws so
 *        streams are reproducible independent of the standard library's
 *        distribution implementations.
 */

#ifndef EPSEFF_RNG_HPP
#define EPSEFF_RNG_HPP

#include <cstdint>
#include <random>

namespace epseff {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform draw in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    // modulo bias is < 2^-44 for every n used here
    return engine_() % n;
  }

  bool coin() { return (engine_() & 1u) != 0; }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace epseff

#endif  // EPSEFF_RNG_HPP

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "direction.hpp"

namespace qsv {

// Deterministic RNG.  Doubles are produced from the raw 64-bit stream rather
// than through distribution objects, so a seed pins the exact byte stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Area-preserving: cos(theta) uniform in [-1, 1), phi uniform in [0, 2 pi).
  Direction unit_direction() {
    const double c = 1.0 - 2.0 * uniform();
    const double theta = std::acos(std::fmin(1.0, std::fmax(-1.0, c)));
    const double phi = 2.0 * M_PI * uniform();
    return Direction(theta, phi);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace qsv

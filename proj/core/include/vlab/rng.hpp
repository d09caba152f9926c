#pragma once

#include <cstdint>

#include "vlab/grid.hpp"

namespace vlab {

// Counter-based generator (splitmix64). Chosen over <random> engines plus
// distributions because std::uniform_real_distribution is implementation
// defined; reproducibility across standard libraries is part of the output
// contract, so every random byte in the project flows through this.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 significant bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [-1, 1).
  double next_symmetric() { return 2.0 * next_unit() - 1.0; }

 private:
  std::uint64_t state_;
};

// Decorrelated per-item seed for batch runs; index 0 never collides with the
// base stream itself.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

// Real-valued samples in [-1, 1), imaginary parts zero.
GridFunction random_real_grid(const Basis& b, std::uint64_t seed);

// Complex samples, both parts in [-1, 1); real part drawn before imaginary.
GridFunction random_complex_grid(const Basis& b, std::uint64_t seed);

// Vilenkin polynomial: coefficients complex in [-1,1)^2 for indices < n_limit,
// zero from n_limit on. Draw order is ascending index.
SpectralFunction random_spectrum_below(const Basis& b, long long n_limit,
                                       std::uint64_t seed);

// Uniform point of the group: digit j drawn as next() mod m_j, ascending j.
Point random_point(const Basis& b, SplitMix64& gen);

}  // namespace vlab

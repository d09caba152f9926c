#include "vlab/rng.hpp"

#include <stdexcept>

#include "vlab/common.hpp"

namespace vlab {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return base + 0x9E3779B97F4A7C15ULL * (index + 1);
}

GridFunction random_real_grid(const Basis& b, std::uint64_t seed) {
  GridFunction f(b);
  SplitMix64 gen(seed);
  for (Complex& v : f.values) v = Complex(gen.next_symmetric(), 0.0);
  return f;
}

GridFunction random_complex_grid(const Basis& b, std::uint64_t seed) {
  GridFunction f(b);
  SplitMix64 gen(seed);
  for (Complex& v : f.values) {
    const double re = gen.next_symmetric();
    const double im = gen.next_symmetric();
    v = Complex(re, im);
  }
  return f;
}

SpectralFunction random_spectrum_below(const Basis& b, long long n_limit,
                                       std::uint64_t seed) {
  if (n_limit < 0 || n_limit > b.size()) {
    throw std::invalid_argument("random_spectrum_below: n_limit out of range");
  }
  SpectralFunction c(b);
  SplitMix64 gen(seed);
  for (long long n = 0; n < n_limit; ++n) {
    const double re = gen.next_symmetric();
    const double im = gen.next_symmetric();
    c.coeffs[static_cast<std::size_t>(n)] = Complex(re, im);
  }
  return c;
}

Point random_point(const Basis& b, SplitMix64& gen) {
  Point x;
  x.digits.resize(static_cast<std::size_t>(b.depth()));
  for (int j = 0; j < b.depth(); ++j) {
    x.digits[static_cast<std::size_t>(j)] =
        static_cast<int>(gen.next() % static_cast<std::uint64_t>(b.m[static_cast<std::size_t>(j)]));
  }
  return x;
}

}  // namespace vlab

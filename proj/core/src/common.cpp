#include "vlab/common.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

namespace vlab {

namespace {

std::atomic<long long>& cap_slot() {
  static std::atomic<long long> cap = [] {
    long long v = 1LL << 24;
    if (const char* env = std::getenv("VLAB_DENSE_CAP")) {
      char* end = nullptr;
      const long long parsed = std::strtoll(env, &end, 10);
      if (end != nullptr && *end == '\0' && parsed > 0) v = parsed;
    }
    return v;
  }();
  return cap;
}

}  // namespace

long long dense_cap() { return cap_slot().load(std::memory_order_relaxed); }

void set_dense_cap(long long cap) {
  if (cap <= 0) throw std::invalid_argument("dense cap must be positive");
  cap_slot().store(cap, std::memory_order_relaxed);
}

void require_dense(long long elements) {
  if (elements < 0 || elements > dense_cap()) {
    throw std::length_error("dense allocation of " + std::to_string(elements) +
                            " elements exceeds the cap of " +
                            std::to_string(dense_cap()) +
                            " (override with VLAB_DENSE_CAP)");
  }
}

Complex unit_root(long long num, long long den, int sign) {
  num %= den;
  if (num < 0) num += den;
  // Quadrant multiples have exact representations; everything else goes
  // through libm with the angle reduced to [0, 2*pi).
  if ((4 * num) % den == 0) {
    switch ((4 * num) / den) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, sign >= 0 ? 1.0 : -1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, sign >= 0 ? -1.0 : 1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(num) /
                       static_cast<double>(den);
  return {std::cos(angle), sign >= 0 ? std::sin(angle) : -std::sin(angle)};
}

}  // namespace vlab

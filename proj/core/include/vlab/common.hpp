#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace vlab {

using Complex = std::complex<double>;

// Cap on the element count of any allocation at full group resolution.
// Bases themselves may describe far larger groups; only materializing data
// over every point is guarded. The default is 2^24, overridable through the
// VLAB_DENSE_CAP environment variable (read once) or set_dense_cap().
long long dense_cap();
void set_dense_cap(long long cap);

// Throws std::length_error when `elements` exceeds the cap.
void require_dense(long long elements);

// exp(sign * 2*pi*i * num/den). Exact at quadrant multiples so that radix-2
// and radix-4 stages use the literal values +/-1 and +/-i.
Complex unit_root(long long num, long long den, int sign);

namespace detail {

template <typename T>
T pairwise_sum_impl(std::span<const T> v) {
  if (v.size() <= 32) {
    T acc{};
    for (const T& x : v) acc += x;
    return acc;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum_impl(v.first(half)) + pairwise_sum_impl(v.subspan(half));
}

}  // namespace detail

// Deterministic reduction: fixed ascending leaf order, pairwise combination.
template <typename T>
T pairwise_sum(std::span<const T> v) {
  return detail::pairwise_sum_impl(v);
}

}  // namespace vlab

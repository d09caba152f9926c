#pragma once

#include <string>
#include <vector>

#include "vlab/common.hpp"

namespace vlab {

/// Truncated bounded Vilenkin group: a radix sequence m_0..m_{N-1} (each
/// >= 2), the generalized powers M_0 = 1, M_{k+1} = m_k * M_k, and
/// lambda = max_k m_k. Points are enumerated little-endian mixed-radix:
/// digit 0 varies fastest, so a flat index t decomposes as t = sum x_k M_k
/// and the level-n cylinder through t is exactly the residue class
/// t mod M_n.
struct Basis {
  std::vector<int> m;
  std::vector<long long> Mk;  // depth()+1 entries, Mk[0] == 1
  long long lambda = 0;

  int depth() const { return static_cast<int>(m.size()); }
  long long size() const { return Mk.back(); }
  bool is_walsh() const;
  std::string label() const;  // e.g. "2x3x2"

  bool operator==(const Basis&) const = default;
};

/// Builds the basis of the given depth. When `depth` exceeds the length of
/// `pattern` the pattern repeats periodically; a shorter depth truncates it.
/// M_depth must fit the 63-bit index range (dense allocations are guarded
/// separately by the cap in common.hpp). Throws std::invalid_argument on an
/// empty pattern, a radix < 2, or depth < 1, and std::overflow_error when
/// the index range is exceeded.
Basis build_basis(const std::vector<int>& pattern, int depth);

struct Point {
  std::vector<int> digits;
};

Point index_to_digits(const Basis& b, long long t);
long long digits_to_index(const Basis& b, const Point& x);

/// Coordinatewise addition mod m_k (the group operation) and its inverse.
Point group_add(const Basis& b, const Point& x, const Point& y);
Point group_sub(const Basis& b, const Point& x, const Point& y);
long long add_index(const Basis& b, long long s, long long t);
long long sub_index(const Basis& b, long long s, long long t);

/// Exact Haar measure of a cylinder as an integer pair num/den.
struct Rational {
  long long num = 0;
  long long den = 1;
  bool operator==(const Rational&) const = default;
};

/// Level-n cylinder: all points agreeing with the anchor in digits
/// 0..level-1. Its measure is exactly 1/M_level.
struct Cylinder {
  int level = 0;
  std::vector<int> anchor;  // `level` digits
};

Cylinder cylinder_at(const Basis& b, int level, const Point& x);
Rational measure(const Basis& b, const Cylinder& c);
long long anchor_index(const Basis& b, const Cylinder& c);
bool contains(const Basis& b, const Cylinder& c, long long t);

}  // namespace vlab

#include "vlab/basis.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace vlab {

bool Basis::is_walsh() const {
  return std::all_of(m.begin(), m.end(), [](int r) { return r == 2; });
}

std::string Basis::label() const {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += 'x';
    out += std::to_string(m[i]);
  }
  return out;
}

Basis build_basis(const std::vector<int>& pattern, int depth) {
  if (pattern.empty()) throw std::invalid_argument("radix pattern is empty");
  if (depth < 1) throw std::invalid_argument("basis depth must be >= 1");
  for (int r : pattern) {
    if (r < 2) throw std::invalid_argument("every radix must be >= 2");
  }
  Basis b;
  b.m.resize(depth);
  for (int k = 0; k < depth; ++k) b.m[k] = pattern[k % pattern.size()];
  b.lambda = *std::max_element(b.m.begin(), b.m.end());
  b.Mk.resize(depth + 1);
  b.Mk[0] = 1;
  constexpr long long kMax = std::numeric_limits<long long>::max();
  for (int k = 0; k < depth; ++k) {
    if (b.Mk[k] > kMax / b.m[k]) {
      throw std::overflow_error("basis index range exceeds 63 bits at level " +
                                std::to_string(k + 1));
    }
    b.Mk[k + 1] = b.Mk[k] * b.m[k];
  }
  return b;
}

Point index_to_digits(const Basis& b, long long t) {
  if (t < 0 || t >= b.size()) throw std::out_of_range("point index out of range");
  Point x;
  x.digits.resize(b.depth());
  for (int k = 0; k < b.depth(); ++k) {
    x.digits[k] = static_cast<int>(t % b.m[k]);
    t /= b.m[k];
  }
  return x;
}

long long digits_to_index(const Basis& b, const Point& x) {
  if (static_cast<int>(x.digits.size()) != b.depth()) {
    throw std::invalid_argument("digit count does not match basis depth");
  }
  long long t = 0;
  for (int k = 0; k < b.depth(); ++k) {
    const int d = x.digits[k];
    if (d < 0 || d >= b.m[k]) throw std::out_of_range("digit out of range");
    t += static_cast<long long>(d) * b.Mk[k];
  }
  return t;
}

Point group_add(const Basis& b, const Point& x, const Point& y) {
  if (x.digits.size() != y.digits.size() ||
      static_cast<int>(x.digits.size()) != b.depth()) {
    throw std::invalid_argument("digit count does not match basis depth");
  }
  Point z;
  z.digits.resize(b.depth());
  for (int k = 0; k < b.depth(); ++k) {
    z.digits[k] = (x.digits[k] + y.digits[k]) % b.m[k];
  }
  return z;
}

Point group_sub(const Basis& b, const Point& x, const Point& y) {
  if (x.digits.size() != y.digits.size() ||
      static_cast<int>(x.digits.size()) != b.depth()) {
    throw std::invalid_argument("digit count does not match basis depth");
  }
  Point z;
  z.digits.resize(b.depth());
  for (int k = 0; k < b.depth(); ++k) {
    z.digits[k] = (x.digits[k] - y.digits[k] + b.m[k]) % b.m[k];
  }
  return z;
}

long long add_index(const Basis& b, long long s, long long t) {
  long long out = 0;
  for (int k = 0; k < b.depth(); ++k) {
    const int m = b.m[k];
    out += static_cast<long long>((s % m + t % m) % m) * b.Mk[k];
    s /= m;
    t /= m;
  }
  return out;
}

long long sub_index(const Basis& b, long long s, long long t) {
  long long out = 0;
  for (int k = 0; k < b.depth(); ++k) {
    const int m = b.m[k];
    out += static_cast<long long>((s % m - t % m + m) % m) * b.Mk[k];
    s /= m;
    t /= m;
  }
  return out;
}

Cylinder cylinder_at(const Basis& b, int level, const Point& x) {
  if (level < 0 || level > b.depth()) throw std::out_of_range("cylinder level");
  if (static_cast<int>(x.digits.size()) < level) {
    throw std::invalid_argument("anchor point has too few digits");
  }
  Cylinder c;
  c.level = level;
  c.anchor.assign(x.digits.begin(), x.digits.begin() + level);
  return c;
}

Rational measure(const Basis& b, const Cylinder& c) {
  if (c.level < 0 || c.level > b.depth()) throw std::out_of_range("cylinder level");
  return Rational{1, b.Mk[c.level]};
}

long long anchor_index(const Basis& b, const Cylinder& c) {
  if (c.level < 0 || c.level > b.depth()) throw std::out_of_range("cylinder level");
  if (static_cast<int>(c.anchor.size()) != c.level) {
    throw std::invalid_argument("anchor digit count does not match level");
  }
  long long a = 0;
  for (int k = 0; k < c.level; ++k) {
    if (c.anchor[k] < 0 || c.anchor[k] >= b.m[k]) {
      throw std::out_of_range("anchor digit out of range");
    }
    a += static_cast<long long>(c.anchor[k]) * b.Mk[k];
  }
  return a;
}

bool contains(const Basis& b, const Cylinder& c, long long t) {
  if (t < 0 || t >= b.size()) throw std::out_of_range("point index out of range");
  return t % b.Mk[c.level] == anchor_index(b, c);
}

}  // namespace vlab

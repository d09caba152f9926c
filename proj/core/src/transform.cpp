#include "vlab/transform.hpp"

#include <bit>
#include <stdexcept>

namespace vlab {

namespace {

std::vector<Complex> stage_roots(int m, int sign) {
  std::vector<Complex> w(m);
  for (int j = 0; j < m; ++j) w[j] = unit_root(j, m, sign);
  return w;
}

// Shared stage driver for analysis (sign = -1, normalized per stage) and
// synthesis (sign = +1, unnormalized).
void run_stages(const Basis& b, std::vector<Complex>& a, int sign, bool normalize) {
  const long long M = b.size();
  std::vector<Complex> line(b.lambda);
  for (int k = 0; k < b.depth(); ++k) {
    const int m = b.m[k];
    const long long stride = b.Mk[k];
    const long long block = b.Mk[k + 1];
    const auto w = stage_roots(m, sign);
    const double scale = normalize ? 1.0 / m : 1.0;
    for (long long base = 0; base < M; base += block) {
      for (long long off = 0; off < stride; ++off) {
        Complex* p = a.data() + base + off;
        if (m == 2) {
          const Complex lo = p[0], hi = p[stride];
          p[0] = (lo + hi) * scale;
          p[stride] = (lo - hi) * scale;
          continue;
        }
        for (int d = 0; d < m; ++d) line[d] = p[d * stride];
        for (int j = 0; j < m; ++j) {
          Complex acc = line[0];
          for (int d = 1; d < m; ++d) acc += line[d] * w[(j * d) % m];
          p[j * stride] = acc * scale;
        }
      }
    }
  }
}

}  // namespace

Complex rademacher(const Basis& b, int k, const Point& x) {
  if (k < 0 || k >= b.depth()) throw std::out_of_range("coordinate out of range");
  return unit_root(x.digits.at(k), b.m[k], +1);
}

Complex character(const Basis& b, long long n, const Point& x) {
  if (n < 0 || n >= b.size()) throw std::out_of_range("frequency out of range");
  Complex out{1.0, 0.0};
  for (int k = 0; k < b.depth() && n > 0; ++k) {
    const int nk = static_cast<int>(n % b.m[k]);
    n /= b.m[k];
    if (nk == 0) continue;
    out *= unit_root(static_cast<long long>(nk) * x.digits.at(k), b.m[k], +1);
  }
  return out;
}

Complex character_at(const Basis& b, long long n, long long t) {
  return character(b, n, index_to_digits(b, t));
}

std::vector<Complex> character_row(const Basis& b, long long n) {
  if (n < 0 || n >= b.size()) throw std::out_of_range("frequency out of range");
  require_dense(b.size());
  std::vector<Complex> row(b.size());
  for (long long t = 0; t < b.size(); ++t) {
    Complex v{1.0, 0.0};
    long long nn = n, tt = t;
    for (int k = 0; k < b.depth() && nn > 0; ++k) {
      const int m = b.m[k];
      const int nk = static_cast<int>(nn % m);
      const int xk = static_cast<int>(tt % m);
      nn /= m;
      tt /= m;
      if (nk != 0 && xk != 0) v *= unit_root(static_cast<long long>(nk) * xk, m, +1);
    }
    row[t] = v;
  }
  return row;
}

CharacterSweep::CharacterSweep(Basis b) : b_(std::move(b)) {
  require_dense(b_.size());
  kdigits_.assign(b_.depth(), 0);
  psi_.assign(b_.size(), Complex{1.0, 0.0});
  roots_.resize(b_.depth());
  for (int j = 0; j < b_.depth(); ++j) roots_[j] = stage_roots(b_.m[j], +1);
  factor_.resize(b_.size() > 1 ? b_.Mk[b_.depth()] : 1);
}

void CharacterSweep::advance() {
  if (k_ + 1 >= b_.size()) throw std::out_of_range("character sweep exhausted");
  // Mixed-radix increment of k. Every digit touched by the carry chain
  // contributes one Rademacher factor to the row update (a digit wrapping
  // from m_j - 1 to 0 contributes r_j^{1 - m_j} = r_j).
  int top = 0;
  while (kdigits_[top] == b_.m[top] - 1) {
    kdigits_[top] = 0;
    ++top;
  }
  ++kdigits_[top];
  ++k_;

  const long long period = b_.Mk[top + 1];
  // factor_[u] = prod_{j <= top} roots_j[u_j] over the low digits of u.
  long long len = 1;
  factor_[0] = Complex{1.0, 0.0};
  for (int j = 0; j <= top; ++j) {
    for (int d = b_.m[j] - 1; d >= 1; --d) {
      const Complex r = roots_[j][d];
      for (long long u = 0; u < len; ++u) factor_[d * len + u] = r * factor_[u];
    }
    len *= b_.m[j];
  }
  Complex* psi = psi_.data();
  const Complex* fac = factor_.data();
  for (long long base = 0; base < b_.size(); base += period) {
    for (long long u = 0; u < period; ++u) psi[base + u] *= fac[u];
  }
}

SpectralFunction vft_forward(const GridFunction& f) {
  std::vector<Complex> a = f.values;
  run_stages(f.basis, a, -1, /*normalize=*/true);
  return SpectralFunction{f.basis, std::move(a)};
}

GridFunction vft_inverse(const SpectralFunction& c) {
  std::vector<Complex> a = c.coeffs;
  run_stages(c.basis, a, +1, /*normalize=*/false);
  return GridFunction{c.basis, std::move(a)};
}

SpectralFunction vft_forward_naive(const GridFunction& f) {
  const Basis& b = f.basis;
  const long long M = b.size();
  require_dense(M);
  SpectralFunction out(b);
  std::vector<Complex> terms(M);
  if (b.is_walsh()) {
    for (long long n = 0; n < M; ++n) {
      for (long long t = 0; t < M; ++t) {
        const bool flip = std::popcount(static_cast<unsigned long long>(n & t)) & 1;
        terms[t] = flip ? -f.values[t] : f.values[t];
      }
      out.coeffs[n] = pairwise_sum(std::span<const Complex>(terms)) / double(M);
    }
    return out;
  }
  for (long long n = 0; n < M; ++n) {
    const auto row = character_row(b, n);
    for (long long t = 0; t < M; ++t) terms[t] = f.values[t] * std::conj(row[t]);
    out.coeffs[n] = pairwise_sum(std::span<const Complex>(terms)) / double(M);
  }
  return out;
}

}  // namespace vlab

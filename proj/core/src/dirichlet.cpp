#include "vlab/dirichlet.hpp"

#include <stdexcept>

#include "vlab/transform.hpp"

namespace vlab {

namespace {

Complex eval_from_digits(const Basis& b, const std::vector<int>& ndigits,
                         const Point& x) {
  if (static_cast<int>(x.digits.size()) != b.depth()) {
    throw std::invalid_argument("digit count does not match basis depth");
  }
  // z = position of the first nonzero digit of x; D_{M_k}(x) = M_k iff k <= z.
  int z = b.depth();
  for (int j = 0; j < b.depth(); ++j) {
    if (x.digits[j] != 0) {
      z = j;
      break;
    }
  }
  int top = -1;
  for (int j = static_cast<int>(ndigits.size()) - 1; j >= 0; --j) {
    if (ndigits[j] != 0) {
      top = j;
      break;
    }
  }
  Complex result{0.0, 0.0};
  Complex phase{1.0, 0.0};
  for (int k = top; k >= 0; --k) {
    const int d = ndigits[k];
    if (d == 0) continue;
    const Complex r = unit_root(x.digits[k], b.m[k], +1);
    if (k <= z) {
      Complex geo{0.0, 0.0};
      Complex ru{1.0, 0.0};
      for (int u = 0; u < d; ++u) {
        geo += ru;
        ru *= r;
      }
      result += phase * geo * static_cast<double>(b.Mk[k]);
    }
    Complex rd{1.0, 0.0};
    for (int u = 0; u < d; ++u) rd *= r;
    phase *= rd;
  }
  return result;
}

}  // namespace

GridFunction dirichlet_dense(const Basis& b, long long n) {
  if (n < 0 || n > b.size()) throw std::out_of_range("kernel order out of range");
  GridFunction out(b);
  if (n == 0) return out;
  CharacterSweep sweep(b);
  for (long long k = 0; k < n; ++k) {
    const auto& row = sweep.row();
    for (long long t = 0; t < b.size(); ++t) out.values[t] += row[t];
    if (k + 1 < n) sweep.advance();
  }
  return out;
}

Complex dirichlet_eval(const Basis& b, const mpz_class& n, const Point& x) {
  if (n < 0) throw std::out_of_range("kernel order out of range");
  mpz_class rest = n;
  std::vector<int> ndigits(b.depth(), 0);
  for (int k = 0; k < b.depth() && rest != 0; ++k) {
    const mpz_class r = rest % b.m[k];
    ndigits[k] = static_cast<int>(r.get_si());
    rest /= b.m[k];
  }
  if (rest != 0) {
    // Only n == M_N may remain: D_{M_N}(x) = M_N * [x == 0].
    if (rest != 1 || n != static_cast<long>(b.size())) {
      throw std::out_of_range("kernel order out of range");
    }
    if (static_cast<int>(x.digits.size()) != b.depth()) {
      throw std::invalid_argument("digit count does not match basis depth");
    }
    for (int d : x.digits) {
      if (d != 0) return Complex{0.0, 0.0};
    }
    return Complex{static_cast<double>(b.size()), 0.0};
  }
  return eval_from_digits(b, ndigits, x);
}

Complex dirichlet_eval(const Basis& b, long long n, const Point& x) {
  return dirichlet_eval(b, mpz_class(static_cast<long>(n)), x);
}

GridFunction fejer_kernel_dense(const Basis& b, long long j) {
  if (j < 1 || j > b.size()) throw std::out_of_range("kernel order out of range");
  GridFunction out(b);
  std::vector<Complex> d(b.size(), Complex{});  // running D_k
  CharacterSweep sweep(b);
  for (long long k = 1; k <= j; ++k) {
    const auto& row = sweep.row();  // psi_{k-1}
    for (long long t = 0; t < b.size(); ++t) {
      d[t] += row[t];
      out.values[t] += d[t];
    }
    if (k < j) sweep.advance();
  }
  const double inv = 1.0 / static_cast<double>(j);
  for (auto& v : out.values) v *= inv;
  return out;
}

}  // namespace vlab

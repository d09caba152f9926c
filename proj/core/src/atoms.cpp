#include "vlab/atoms.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace vlab {

namespace {

constexpr double kAtomTol = 1e-10;

}  // namespace

AtomCheck check_atom(const GridFunction& a, const Cylinder& I, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("atom exponent must be positive");
  const Basis& b = a.basis;
  if (I.level < 0 || I.level > b.depth()) {
    throw std::out_of_range("cylinder level out of range");
  }
  AtomCheck r;
  const Rational mu = measure(b, I);
  r.sup_limit = std::pow(static_cast<double>(mu.den) / static_cast<double>(mu.num), 1.0 / p);
  Complex inside{};
  for (long long t = 0; t < b.size(); ++t) {
    const double v = std::abs(a.values[static_cast<size_t>(t)]);
    if (v > r.sup_abs) r.sup_abs = v;
    if (contains(b, I, t)) {
      inside += a.values[static_cast<size_t>(t)];
    } else if (v > r.leak_abs) {
      r.leak_abs = v;
    }
  }
  r.mean_abs = std::abs(inside) / static_cast<double>(b.size());
  r.mean_zero = r.mean_abs <= kAtomTol;
  r.sup_bounded = r.sup_abs <= r.sup_limit * (1.0 + kAtomTol);
  r.supported = r.leak_abs <= kAtomTol;
  return r;
}

bool validate_atom(const GridFunction& a, const Cylinder& I, double p) {
  return check_atom(a, I, p).ok();
}

double hp_atomic_bound(const AtomicDecomposition& dec) {
  if (!(dec.p > 0.0)) throw std::invalid_argument("atom exponent must be positive");
  if (dec.mu.size() != dec.atoms.size() || dec.mu.size() != dec.supports.size()) {
    throw std::invalid_argument("decomposition arrays disagree in length");
  }
  long double acc = 0.0L;
  for (size_t k = 0; k < dec.mu.size(); ++k) {
    if (!validate_atom(dec.atoms[k], dec.supports[k], dec.p)) {
      throw std::invalid_argument("decomposition entry " + std::to_string(k) +
                                  " is not a valid atom");
    }
    acc += powl(fabsl(static_cast<long double>(dec.mu[k])), static_cast<long double>(dec.p));
  }
  return static_cast<double>(powl(acc, 1.0L / static_cast<long double>(dec.p)));
}

}  // namespace vlab

#include "vlab/grid.hpp"

#include <stdexcept>

namespace vlab {

GridFunction::GridFunction(Basis b) : basis(std::move(b)) {
  require_dense(basis.size());
  values.assign(basis.size(), Complex{});
}

GridFunction::GridFunction(Basis b, std::vector<Complex> v)
    : basis(std::move(b)), values(std::move(v)) {
  require_dense(basis.size());
  if (static_cast<long long>(values.size()) != basis.size()) {
    throw std::invalid_argument("value count does not match basis size");
  }
}

SpectralFunction::SpectralFunction(Basis b) : basis(std::move(b)) {
  require_dense(basis.size());
  coeffs.assign(basis.size(), Complex{});
}

SpectralFunction::SpectralFunction(Basis b, std::vector<Complex> c)
    : basis(std::move(b)), coeffs(std::move(c)) {
  require_dense(basis.size());
  if (static_cast<long long>(coeffs.size()) != basis.size()) {
    throw std::invalid_argument("coefficient count does not match basis size");
  }
}

Complex integral(const GridFunction& f) {
  const Complex total = pairwise_sum(std::span<const Complex>(f.values));
  return total / static_cast<double>(f.basis.size());
}

void require_same_basis(const Basis& a, const Basis& b) {
  if (!(a == b)) throw std::invalid_argument("basis mismatch");
}

GridFunction operator+(const GridFunction& f, const GridFunction& g) {
  require_same_basis(f.basis, g.basis);
  GridFunction out = f;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += g.values[i];
  return out;
}

GridFunction operator-(const GridFunction& f, const GridFunction& g) {
  require_same_basis(f.basis, g.basis);
  GridFunction out = f;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] -= g.values[i];
  return out;
}

GridFunction operator*(Complex c, const GridFunction& f) {
  GridFunction out = f;
  for (auto& v : out.values) v *= c;
  return out;
}

}  // namespace vlab

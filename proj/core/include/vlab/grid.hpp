#pragma once

#include <vector>

#include "vlab/basis.hpp"
#include "vlab/common.hpp"

namespace vlab {

/// A function sampled at every point of the (truncated) group, one complex
/// value per flat index. Construction allocates M_N values and is therefore
/// subject to the dense cap.
struct GridFunction {
  Basis basis;
  std::vector<Complex> values;

  GridFunction() = default;
  explicit GridFunction(Basis b);
  GridFunction(Basis b, std::vector<Complex> v);
};

/// Coefficients against the character system, index-aligned with the
/// frequency order (coeff n multiplies character n).
struct SpectralFunction {
  Basis basis;
  std::vector<Complex> coeffs;

  SpectralFunction() = default;
  explicit SpectralFunction(Basis b);
  SpectralFunction(Basis b, std::vector<Complex> c);
};

/// Integral against normalized Haar measure: (1/M_N) * sum of values,
/// pairwise-reduced in ascending index order.
Complex integral(const GridFunction& f);

void require_same_basis(const Basis& a, const Basis& b);

GridFunction operator+(const GridFunction& f, const GridFunction& g);
GridFunction operator-(const GridFunction& f, const GridFunction& g);
GridFunction operator*(Complex c, const GridFunction& f);

}  // namespace vlab

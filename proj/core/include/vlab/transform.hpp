#pragma once

#include <vector>

#include "vlab/grid.hpp"

namespace vlab {

/// k-th generalized Rademacher value exp(2*pi*i*x_k/m_k).
Complex rademacher(const Basis& b, int k, const Point& x);

/// Character n evaluated at x: the product of Rademacher powers over the
/// digits of n.
Complex character(const Basis& b, long long n, const Point& x);
Complex character_at(const Basis& b, long long n, long long t);

/// Character n sampled at every point of the group.
std::vector<Complex> character_row(const Basis& b, long long n);

/// Streams the character rows psi_0, psi_1, ... in frequency order. Each
/// advance() multiplies the row by one Rademacher factor per mixed-radix
/// carry, so a full sweep over all M_N rows costs O(M_N) amortized per row.
class CharacterSweep {
 public:
  explicit CharacterSweep(Basis b);

  long long index() const { return k_; }
  const std::vector<Complex>& row() const { return psi_; }

  /// Moves to psi_{k+1}; requires k+1 < M_N.
  void advance();

 private:
  Basis b_;
  long long k_ = 0;
  std::vector<int> kdigits_;
  std::vector<Complex> psi_;
  std::vector<std::vector<Complex>> roots_;  // roots_[j][d] = e^{2 pi i d/m_j}
  std::vector<Complex> factor_;              // scratch, one entry per period
};

/// Analysis: coeff(n) = (1/M_N) sum_x f(x) * conj(psi_n(x)), computed by
/// per-coordinate DFT stages in O(M_N * sum m_k). Stage twiddles are exact
/// at quadrant angles, so the all-radix-2 case runs in pure +/-1 arithmetic.
SpectralFunction vft_forward(const GridFunction& f);

/// Synthesis: f(x) = sum_n coeff(n) * psi_n(x). Exact inverse of
/// vft_forward up to roundoff.
GridFunction vft_inverse(const SpectralFunction& c);

/// Direct O(M_N^2) evaluation of the analysis sum, kept as a slow reference
/// path (the CLI reports its timing next to the fast one).
SpectralFunction vft_forward_naive(const GridFunction& f);

}  // namespace vlab

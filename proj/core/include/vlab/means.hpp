#pragma once

#include <vector>

#include "vlab/grid.hpp"
#include "vlab/transform.hpp"
#include "vlab/weights.hpp"

namespace vlab {

// Group convolution against Haar measure, (f*g)(x) = (1/M_N) sum_t f(t) g(x-t),
// computed spectrally: both transforms, pointwise product, synthesis.
GridFunction convolve(const GridFunction& f, const GridFunction& g);

// S_0 f .. S_{n_max} f where S_n = sum_{k<n} c_k psi_k (S_0 = 0). Dense:
// allocates (n_max+1) grid functions, guarded by the dense cap on the product.
std::vector<GridFunction> partial_sums_prefix(const SpectralFunction& c, long long n_max);

// Streams S_1, S_2, ... one at a time with O(M_N) state.
class PartialSumSweep {
 public:
  explicit PartialSumSweep(const SpectralFunction& c);

  long long n() const { return n_; }                     // values() holds S_n
  const std::vector<Complex>& values() const { return s_; }
  void advance();                                        // S_n -> S_{n+1}, n < M_N

 private:
  Basis basis_;
  std::vector<Complex> coeffs_;
  CharacterSweep sweep_;
  std::vector<Complex> s_;
  long long n_;
};

struct MeanResult {
  GridFunction value;
  long long n = 0;
  WeightSpec weight;
};

// Forward-weighted mean T_n f = (1/Q_n) sum_{k=0}^{n-1} q_k S_k f, computed by
// definition through the streaming partial sums. Requires 1 <= n <= M_N and
// Q_n > 0 (throws std::domain_error on a vanishing prefix).
MeanResult t_mean(const GridFunction& f, const WeightSequence& w, long long n);
MeanResult t_mean_from_spectrum(const SpectralFunction& c, const WeightSequence& w,
                                long long n);

// Reverse-weighted comparison mean t_n f = (1/Nor_n) sum_{k=1}^{n} q_{n-k} S_k f,
// defined for the fejer, cesaro, and norlund_log kinds only. The displayed
// normalizer Nor_n is Q_n for fejer/norlund_log and Q_{n+1} (= A_n^alpha, the
// full binomial mass including the empty S_0 slot) for cesaro.
MeanResult norlund_mean(const GridFunction& f, const WeightSequence& w, long long n);

// F_n = (1/Q_n) sum_{k=0}^{n-1} q_k D_k; T_n f = f * F_n.
GridFunction t_kernel(const Basis& b, const WeightSequence& w, long long n);

// Sup-norm gap between F_n and its Abel-transformed form
//   (1/Q_n) ( sum_{j=1}^{n-2} (q_j - q_{j+1}) j K_j + q_{n-1} (n-1) K_{n-1} ),
// K_j the averaged-kernel family; identically 0 up to rounding.
double abel_kernel_gap(const Basis& b, const WeightSequence& w, long long n);

}  // namespace vlab

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "vlab/grid.hpp"
#include "vlab/weights.hpp"

namespace vlab {

// Lacunary block construction witnessing weak-L_p blow-up of the forward
// weighted means below the critical index p = 1/2. The spectrum is constant
// on index blocks [M_{alpha_k}, M_{alpha_k+1}) with value
// M_{alpha_k}^{P-1}/alpha_k, P = 1/p an integer, so every growth condition
// is a statement about integers and checks exactly. Block k scaled by
// alpha_k/lambda is a p-atom; the atomic H_p mass stays bounded while the
// mean at n = M_{alpha_k}+2 grows like M_{alpha_k}^{P-2}/alpha_k.
struct CounterexampleSpec {
  long p_inverse = 3;              // P = 1/p, integer >= 3
  std::vector<int> pattern;        // radix pattern, cycled
  long long lambda = 2;            // max radix
  std::vector<long> alphas;        // strictly increasing levels, alphas[0] >= 1
  std::vector<mpz_class> m_alpha;       // M_{alpha_k}
  std::vector<mpz_class> m_alpha_next;  // M_{alpha_k + 1}
  std::vector<mpq_class> coeff;         // M_{alpha_k}^{P-1} / alpha_k

  std::size_t blocks() const { return alphas.size(); }
};

// Assembles exact block data for a given level sequence. Validates
// p_inverse >= 3, a nonempty pattern of radices >= 2, and strictly
// increasing positive levels; throws std::invalid_argument otherwise.
CounterexampleSpec make_counterexample(long p_inverse, std::vector<int> pattern,
                                       std::vector<long> alphas);

// Greedy minimal admissible sequence: alpha_0 = alpha0, and each later level
// is the smallest integer above its predecessor passing both exact growth
// conditions below. Terminates because M_a grows geometrically in a.
CounterexampleSpec find_alphas(long p_inverse, const std::vector<int>& pattern,
                               int count, long alpha0 = 1);

// Exact big-rational growth conditions on the level sequence:
//   separation (k >= 0): lambda * sum_{eta<k} M_{alpha_eta}^P / alpha_eta
//                        <  M_{alpha_k}^P / alpha_k
//   gap (k >= 1):        32 lambda M_{alpha_{k-1}}^P / alpha_{k-1}
//                        <  M_{alpha_k}^{P-2} / alpha_k
bool separation_holds(const CounterexampleSpec& s, std::size_t k);
bool gap_holds(const CounterexampleSpec& s, std::size_t k);

// Convergence evidence for sum_k alpha_k^{-p}, the series controlling the
// H_p mass. Raw increments decay far too slowly to witness convergence at
// desk-scale block counts, so the certificate is geometric growth of the
// levels (min ratio >= 2 makes the series dominated by a geometric one).
struct AlphaTailReport {
  double partial_sum = 0.0;     // sum of alpha_k^{-p} over available k
  double last_increment = 0.0;  // final term of that sum
  double min_ratio = 0.0;       // min over k of alpha_{k+1}/alpha_k
  bool geometric = false;       // min_ratio >= 2
};
AlphaTailReport alpha_tail_report(const CounterexampleSpec& s);

// Space-domain assembly of the truncation through block k_max at resolution
// alpha_{k_max}+1 (dense cap applies). Each block contributes
// coeff_k * (D_{M_{alpha_k+1}} - D_{M_{alpha_k}}), which is supported on the
// multiples of M_{alpha_k}.
GridFunction build_dense(const CounterexampleSpec& s, std::size_t k_max);

// Normalized single-block bump at resolution alpha_k+1: zero mean, support
// inside the level-alpha_k cylinder at 0, sup strictly under
// M_{alpha_k}^P = measure(support)^{-1/p}. Scaling by lambda/alpha_k
// recovers block k of build_dense.
GridFunction atom_dense(const CounterexampleSpec& s, std::size_t k);

// The exact spectral truncation entering the blow-up argument at block k:
// complete blocks below k plus the single leading coefficient of block k,
// in a depth-(alpha_k+1) basis. The full construction and this truncation
// have identical means at n <= M_{alpha_k}+2.
SpectralFunction truncated_spectrum_dense(const CounterexampleSpec& s,
                                          std::size_t k);

// Leading term of the split T_{M+2} f = I + II at M = M_{alpha_k}:
//   II(x) = (q_{M+1}/Q_{M+2}) * (coeff_k psi_M(x) + S_M f(x)),
// with S_M f evaluated through closed-form Dirichlet differences of the
// complete blocks (O(k * depth) per point, no dense storage). Requires
// k >= 1, digits through level alpha_k, and Q_{M+2} > 0 (std::domain_error
// on a vanishing prefix).
Complex term_II_exact(const CounterexampleSpec& s, std::size_t k,
                      const WeightSequence& w, const Point& x);

// Certified bound 4 lambda M_{alpha_{k-1}}^P / alpha_{k-1} (k >= 1): it
// dominates |S_j f| for every j <= M_{alpha_k} (sj_bound) and hence the
// averaged bulk term I of the split (term_I_bound).
double sj_bound(const CounterexampleSpec& s, std::size_t k);
double term_I_bound(const CounterexampleSpec& s, std::size_t k);

// Pointwise certified lower bound M_{alpha_k}^{P-2} / (divisor * alpha_k).
// The divisor is 16 on the non-increasing-weight path and 8 on the
// non-decreasing one.
double chain_threshold(const CounterexampleSpec& s, std::size_t k, int divisor);

struct ChainReport {
  std::size_t k = 0;
  bool dense = false;          // exhaustive over the level-(alpha_k+1) grid
  std::size_t points = 0;
  int divisor = 16;
  double q_ratio = 0.0;        // q_{M+1} / Q_{M+2}
  double c_at_m = 0.0;         // M * q_ratio, the normalization achieved at M
  double threshold = 0.0;
  double i_bound = 0.0;
  double min_abs_ii = 0.0;     // min over evaluated x of |II|
  double min_margin = 0.0;     // min over evaluated x of |II| - i_bound
  double pass_fraction = 0.0;  // fraction of x with margin >= threshold
  bool passed = false;         // pass_fraction == 1
};

// Verifies |T_{M+2} f| >= threshold pointwise through the split
// |T| >= |II| - |I|: II exactly per point, |I| by its certified bound.
// Evaluates the whole level-(alpha_k+1) grid when it fits the dense cap,
// else `sample_points` points from a splitmix stream keyed by (seed, k).
// Requires k >= 1, M_{alpha_k+1} within the 63-bit index range, and a
// monotone weight family whose achieved ratio M q_{M+1}/Q_{M+2} clears the
// sufficiency gate (3/14 non-increasing, 2/7 non-decreasing); below the
// gate the threshold is not certified and std::domain_error is thrown.
ChainReport lower_bound_chain(const CounterexampleSpec& s, std::size_t k,
                              const WeightSequence& w,
                              std::size_t sample_points = 10000,
                              std::uint64_t seed = 0);

struct DenseChainReport {
  double min_abs_t = 0.0;       // min over the grid of |T_{M+2} f| itself
  double threshold = 0.0;
  double max_rel_ii_gap = 0.0;  // closed-form II vs dense pipeline, relative
  double max_abs_i = 0.0;       // dense bulk term, must stay under i_bound
  double i_bound = 0.0;
  double max_abs_sj = 0.0;      // sweep of |S_j f| over 1 <= j <= M, all x
  double sj_limit = 0.0;
  bool passed = false;
};

// Full dense cross-validation of the split at blocks small enough to
// materialize: T_{M+2} f comes from the generic streaming mean, II from the
// closed form, and I as their difference. `passed` additionally requires
// the closed-form/dense gap to stay within 1e-8 relative.
DenseChainReport dense_chain_check(const CounterexampleSpec& s, std::size_t k,
                                   const WeightSequence& w);

// Certified weak-L_p lower bound for the mean at n = M_{alpha_k}+2: the
// pointwise bound M_{alpha_k}^{P-2}/(16 alpha_k) holds on the whole group
// (measure one), so it bounds the quasi-norm from below with any p. The gap
// condition makes the sequence strictly increasing in k.
double divergence_ratio(const CounterexampleSpec& s, std::size_t k);

// lambda * (sum_{k<=k_max} alpha_k^{-p})^{1/p}: atomic H_p bound of the
// truncation through k_max, uniformly bounded thanks to geometric level
// growth.
double hp_bound(const CounterexampleSpec& s, std::size_t k_max);

}  // namespace vlab

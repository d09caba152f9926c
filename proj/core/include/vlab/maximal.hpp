#pragma once

#include <vector>

#include "vlab/grid.hpp"
#include "vlab/weights.hpp"

namespace vlab {

struct MaximalResult {
  Basis basis;
  std::vector<double> sup_abs;   // pointwise sup over the whole family
  std::vector<long long> arg_n;  // n attaining it; 0 marks the |f| tail term
};

// T* f = sup over all n >= 1 of |T_n f|, exact for level-N data: the maximum
// over 1 <= n <= M_N (orders with Q_n <= 0 skipped) closed with |f|, because
// past M_N every T_n is a convex combination t T_{M_N} f + (1-t) f with
// t = Q_{M_N}/Q_n, so the tail supremum sits at an endpoint.
MaximalResult maximal_t(const GridFunction& f, const WeightSequence& w);

// sigma* f over the averaged family sigma_n = (1/n) sum_{k=1}^{n} S_k, with
// the same endpoint closure.
MaximalResult maximal_fejer(const GridFunction& f);

// Certified pointwise constant c_n with |T_n f| <= c_n sigma* f. Returns
// (2 q_{n-1} (n-1) - Q_n) / Q_n for non-decreasing kinds (exact when q_0 = 0)
// and 1 for the purely non-increasing families. Requires n >= 2 and Q_n > 0.
double domination_bound(const WeightSequence& w, long long n);

// One fused sweep shared across weight kinds: streams S_n once and tracks,
// per kind, sup_n |T_n f| plus the rescaled sup_n |T_n f| / c_n, together
// with the common sigma*. No argmax bookkeeping, planar arrays throughout;
// this is the batch engine behind the domination experiments.
struct DominationBatch {
  std::vector<double> sigma_star;               // tail-closed with |f|
  std::vector<std::vector<double>> t_star;      // per kind, tail-closed with |f|
  std::vector<std::vector<double>> scaled_star; // per kind: sup_n |T_n f| / c_n over
                                                // 2 <= n <= M_N; equals t_star for
                                                // non-increasing kinds (c = 1)
  std::vector<double> c_max;                    // per kind: max c_n used (1 if fixed)
};
DominationBatch domination_batch(const SpectralFunction& c,
                                 const std::vector<WeightSequence>& kinds);

}  // namespace vlab

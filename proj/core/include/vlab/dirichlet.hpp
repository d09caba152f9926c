#pragma once

#include <gmpxx.h>

#include "vlab/grid.hpp"

namespace vlab {

/// Dirichlet kernel D_n = sum_{k<n} psi_k sampled over the whole group.
/// D_0 is identically zero; D_{M_n} equals M_n on the level-n cylinder
/// through 0 and vanishes elsewhere.
GridFunction dirichlet_dense(const Basis& b, long long n);

/// Closed-form evaluation of D_n(x) via the digit recursion
///   D_{q M_k + r} = D_{M_k} * sum_{u<q} r_k^u + r_k^q * D_r,
/// O(depth * lambda) per point and independent of the dense cap. The
/// frequency may be any integer in [0, M_N]; the big-integer overload
/// serves bases whose index range dwarfs the dense tier.
Complex dirichlet_eval(const Basis& b, const mpz_class& n, const Point& x);
Complex dirichlet_eval(const Basis& b, long long n, const Point& x);

/// Arithmetic-mean kernel (1/j) * sum_{k=1..j} D_k.
GridFunction fejer_kernel_dense(const Basis& b, long long j);

}  // namespace vlab

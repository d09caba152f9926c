#pragma once

#include <vector>

#include "vlab/basis.hpp"
#include "vlab/grid.hpp"

namespace vlab {

// Detailed verdict for the three atom requirements on a cylinder I:
// zero mean over I, sup bound mu(I)^{-1/p}, and support inside I.
struct AtomCheck {
  bool mean_zero = false;
  bool sup_bounded = false;
  bool supported = false;
  double mean_abs = 0.0;   // |(1/M_N) sum_{x in I} a(x)|
  double sup_abs = 0.0;    // max_x |a(x)|
  double sup_limit = 0.0;  // mu(I)^{-1/p}
  double leak_abs = 0.0;   // max |a| outside I

  bool ok() const { return mean_zero && sup_bounded && supported; }
};

AtomCheck check_atom(const GridFunction& a, const Cylinder& I, double p);
bool validate_atom(const GridFunction& a, const Cylinder& I, double p);

struct AtomicDecomposition {
  double p = 1.0;
  std::vector<double> mu;  // scalar weights, aligned with atoms/supports
  std::vector<GridFunction> atoms;
  std::vector<Cylinder> supports;
};

// (sum_k |mu_k|^p)^{1/p}; every atom must pass validate_atom first
// (std::invalid_argument otherwise).
double hp_atomic_bound(const AtomicDecomposition& dec);

}  // namespace vlab

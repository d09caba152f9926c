#pragma once

#include <vector>

#include "vlab/grid.hpp"

namespace vlab {

// Conditional expectations of a grid function at every truncation level,
// stored compactly: levels[n] has M_n entries and levels[n][r] is the average
// of f over the level-n cylinder of residue r (equivalently S_{M_n} f).
struct Martingale {
  Basis basis;
  std::vector<std::vector<Complex>> levels;  // n = 0..N, levels[n].size() == M_n

  int depth() const { return static_cast<int>(levels.size()) - 1; }
};

Martingale martingale_from_function(const GridFunction& f);

// Level-n member expanded back to the full grid.
GridFunction level_function(const Martingale& m, int n);

// f*(x) = max_n |levels[n][x mod M_n]|, one value per grid point.
std::vector<double> maximal_function(const Martingale& m);

// ||f*||_p of the martingale generated by f.
double hp_norm(const GridFunction& f, double p);

}  // namespace vlab

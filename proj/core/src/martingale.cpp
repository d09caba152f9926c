#include "vlab/martingale.hpp"

#include <cmath>
#include <stdexcept>

#include "vlab/norms.hpp"

namespace vlab {

Martingale martingale_from_function(const GridFunction& f) {
  const Basis& b = f.basis;
  const int N = b.depth();
  Martingale m;
  m.basis = b;
  m.levels.resize(static_cast<size_t>(N) + 1);
  m.levels[static_cast<size_t>(N)] = f.values;
  // Average one radix step at a time: the level-n entry at residue r is the
  // mean of the m_n level-(n+1) entries r, r + M_n, ..., r + (m_n-1) M_n.
  for (int n = N - 1; n >= 0; --n) {
    const long long Mn = b.Mk[static_cast<size_t>(n)];
    const int mn = b.m[static_cast<size_t>(n)];
    const auto& up = m.levels[static_cast<size_t>(n) + 1];
    auto& down = m.levels[static_cast<size_t>(n)];
    down.assign(static_cast<size_t>(Mn), Complex{});
    for (long long r = 0; r < Mn; ++r) {
      Complex acc{};
      for (int d = 0; d < mn; ++d) acc += up[static_cast<size_t>(r + d * Mn)];
      down[static_cast<size_t>(r)] = acc / static_cast<double>(mn);
    }
  }
  return m;
}

GridFunction level_function(const Martingale& m, int n) {
  if (n < 0 || n > m.depth()) throw std::out_of_range("martingale level out of range");
  const long long Mn = m.basis.Mk[static_cast<size_t>(n)];
  GridFunction out(m.basis);
  const auto& lvl = m.levels[static_cast<size_t>(n)];
  for (long long t = 0; t < m.basis.size(); ++t) {
    out.values[static_cast<size_t>(t)] = lvl[static_cast<size_t>(t % Mn)];
  }
  return out;
}

std::vector<double> maximal_function(const Martingale& m) {
  const long long M = m.basis.size();
  std::vector<double> star(static_cast<size_t>(M), 0.0);
  for (int n = 0; n <= m.depth(); ++n) {
    const long long Mn = m.basis.Mk[static_cast<size_t>(n)];
    const auto& lvl = m.levels[static_cast<size_t>(n)];
    for (long long t = 0; t < M; ++t) {
      const double a = std::abs(lvl[static_cast<size_t>(t % Mn)]);
      if (a > star[static_cast<size_t>(t)]) star[static_cast<size_t>(t)] = a;
    }
  }
  return star;
}

double hp_norm(const GridFunction& f, double p) {
  return lp_norm(maximal_function(martingale_from_function(f)), p);
}

}  // namespace vlab

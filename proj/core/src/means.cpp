#include "vlab/means.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vlab/common.hpp"
#include "vlab/transform.hpp"

namespace vlab {

namespace {

void require_mean_range(const Basis& b, long long n) {
  if (n < 1 || n > b.size()) throw std::out_of_range("mean order out of range");
}

double positive_prefix(const WeightSequence& w, double Qn) {
  if (!(Qn > 0.0)) {
    throw std::domain_error("prefix weight sum vanishes for " + w.label());
  }
  return Qn;
}

}  // namespace

GridFunction convolve(const GridFunction& f, const GridFunction& g) {
  require_same_basis(f.basis, g.basis);
  SpectralFunction cf = vft_forward(f);
  const SpectralFunction cg = vft_forward(g);
  for (size_t i = 0; i < cf.coeffs.size(); ++i) cf.coeffs[i] *= cg.coeffs[i];
  return vft_inverse(cf);
}

std::vector<GridFunction> partial_sums_prefix(const SpectralFunction& c, long long n_max) {
  const Basis& b = c.basis;
  if (n_max < 0 || n_max > b.size()) throw std::out_of_range("prefix length out of range");
  require_dense((n_max + 1) * b.size());
  std::vector<GridFunction> out;
  out.reserve(static_cast<size_t>(n_max) + 1);
  out.emplace_back(b);  // S_0 = 0
  if (n_max == 0) return out;
  PartialSumSweep sweep(c);
  for (long long n = 1; n <= n_max; ++n) {
    out.emplace_back(b, sweep.values());
    if (n < n_max) sweep.advance();
  }
  return out;
}

PartialSumSweep::PartialSumSweep(const SpectralFunction& c)
    : basis_(c.basis),
      coeffs_(c.coeffs),
      sweep_(c.basis),
      s_(static_cast<size_t>(c.basis.size())),
      n_(1) {
  // S_1 = c_0 psi_0
  const auto& row = sweep_.row();
  for (size_t t = 0; t < s_.size(); ++t) s_[t] = coeffs_[0] * row[t];
}

void PartialSumSweep::advance() {
  if (n_ >= basis_.size()) throw std::out_of_range("partial sum sweep exhausted");
  sweep_.advance();
  const auto& row = sweep_.row();  // psi_n
  const Complex c = coeffs_[static_cast<size_t>(n_)];
  for (size_t t = 0; t < s_.size(); ++t) s_[t] += c * row[t];
  ++n_;
}

MeanResult t_mean(const GridFunction& f, const WeightSequence& w, long long n) {
  return t_mean_from_spectrum(vft_forward(f), w, n);
}

MeanResult t_mean_from_spectrum(const SpectralFunction& c, const WeightSequence& w,
                                long long n) {
  const Basis& b = c.basis;
  require_mean_range(b, n);
  const auto Qs = w.prefix_sums(n);
  const double Qn = positive_prefix(w, Qs[static_cast<size_t>(n)]);
  // Weighted running sum by definition: W_n = sum_{k<n} q_k S_k, built from
  // the streaming partial sums (the k = 0 term is empty).
  GridFunction out(b);
  if (n == 1) return MeanResult{std::move(out), n, w.spec()};
  const auto qs = w.q_values(n);
  PartialSumSweep sweep(c);
  for (long long k = 1; k < n; ++k) {
    const double qk = qs[static_cast<size_t>(k)];
    const auto& s = sweep.values();
    if (qk != 0.0) {
      for (size_t t = 0; t < out.values.size(); ++t) out.values[t] += qk * s[t];
    }
    if (k + 1 < n) sweep.advance();
  }
  const double inv = 1.0 / Qn;
  for (auto& v : out.values) v *= inv;
  return MeanResult{std::move(out), n, w.spec()};
}

MeanResult norlund_mean(const GridFunction& f, const WeightSequence& w, long long n) {
  const Basis& b = f.basis;
  require_mean_range(b, n);
  const WeightKind kind = w.kind();
  if (kind != WeightKind::fejer && kind != WeightKind::cesaro &&
      kind != WeightKind::norlund_log) {
    throw std::invalid_argument("reverse-weighted mean is defined for fejer, cesaro, "
                                "and norlund_log kinds only");
  }
  const auto Qs = w.prefix_sums(n + 1);
  const double nor = positive_prefix(
      w, kind == WeightKind::cesaro ? Qs[static_cast<size_t>(n) + 1]
                                    : Qs[static_cast<size_t>(n)]);
  const auto qs = w.q_values(n);
  GridFunction out(b);
  PartialSumSweep sweep(vft_forward(f));
  for (long long k = 1; k <= n; ++k) {
    const double qk = qs[static_cast<size_t>(n - k)];
    const auto& s = sweep.values();
    if (qk != 0.0) {
      for (size_t t = 0; t < out.values.size(); ++t) out.values[t] += qk * s[t];
    }
    if (k < n) sweep.advance();
  }
  const double inv = 1.0 / nor;
  for (auto& v : out.values) v *= inv;
  return MeanResult{std::move(out), n, w.spec()};
}

GridFunction t_kernel(const Basis& b, const WeightSequence& w, long long n) {
  require_mean_range(b, n);
  const auto Qs = w.prefix_sums(n);
  const double Qn = positive_prefix(w, Qs[static_cast<size_t>(n)]);
  // F_n = sum_{j<n} (Q_n - Q_{j+1})/Q_n psi_j: character j sits in D_k iff k > j.
  SpectralFunction c(b);
  for (long long j = 0; j < n; ++j) {
    c.coeffs[static_cast<size_t>(j)] = (Qn - Qs[static_cast<size_t>(j) + 1]) / Qn;
  }
  return vft_inverse(c);
}

double abel_kernel_gap(const Basis& b, const WeightSequence& w, long long n) {
  if (n < 2) throw std::invalid_argument("kernel identity needs n >= 2");
  require_mean_range(b, n);
  const auto qs = w.q_values(n);
  const double Qn = positive_prefix(w, w.prefix_sum(n));
  const GridFunction lhs = t_kernel(b, w, n);
  // rhs accumulates (q_j - q_{j+1}) P_j for j <= n-2 plus q_{n-1} P_{n-1},
  // where P_j = sum_{k=1}^{j} D_k = j K_j.
  const auto M = static_cast<size_t>(b.size());
  std::vector<Complex> d(M), p(M), acc(M);
  CharacterSweep sweep(b);
  for (long long j = 1; j < n; ++j) {
    const auto& row = sweep.row();  // psi_{j-1}; lifts D_{j-1} to D_j
    for (size_t t = 0; t < M; ++t) {
      d[t] += row[t];
      p[t] += d[t];
    }
    const double coef = (j <= n - 2) ? qs[static_cast<size_t>(j)] - qs[static_cast<size_t>(j) + 1]
                                     : qs[static_cast<size_t>(n) - 1];
    if (coef != 0.0) {
      for (size_t t = 0; t < M; ++t) acc[t] += coef * p[t];
    }
    if (j + 1 < n) sweep.advance();
  }
  double gap = 0.0;
  for (size_t t = 0; t < M; ++t) {
    gap = std::max(gap, std::abs(lhs.values[t] - acc[t] / Qn));
  }
  return gap;
}

}  // namespace vlab

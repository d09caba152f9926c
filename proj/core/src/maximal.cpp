#include "vlab/maximal.hpp"

#include <cmath>
#include <stdexcept>

#include "vlab/transform.hpp"

namespace vlab {

namespace {

// Per-order scalars for one kind inside the batch sweep. A zero inverse marks
// an order that must be skipped (vanishing prefix sum).
struct KindScalars {
  std::vector<double> q;        // q_0 .. q_{M}
  std::vector<double> inv_q2;   // (1/Q_n)^2 or 0
  std::vector<double> inv_qc2;  // (1/(Q_n c_n))^2 or 0
  double c_max = 1.0;
  bool rescaled = false;  // true when c_n varies (non-decreasing kinds)
};

KindScalars make_scalars(const WeightSequence& w, long long M) {
  KindScalars ks;
  ks.q = w.q_values(M + 1);
  const auto Qs = w.prefix_sums(M);
  ks.inv_q2.assign(static_cast<size_t>(M) + 1, 0.0);
  ks.inv_qc2.assign(static_cast<size_t>(M) + 1, 0.0);
  ks.rescaled = !w.non_increasing();
  for (long long n = 1; n <= M; ++n) {
    const double Q = Qs[static_cast<size_t>(n)];
    if (!(Q > 0.0)) continue;
    const double inv = 1.0 / Q;
    ks.inv_q2[static_cast<size_t>(n)] = inv * inv;
    if (ks.rescaled && n >= 2) {
      const double c = (2.0 * ks.q[static_cast<size_t>(n) - 1] * static_cast<double>(n - 1) - Q) / Q;
      if (c > 0.0) {
        ks.inv_qc2[static_cast<size_t>(n)] = inv * inv / (c * c);
        if (c > ks.c_max) ks.c_max = c;
      }
    }
  }
  return ks;
}

}  // namespace

double domination_bound(const WeightSequence& w, long long n) {
  if (n < 2) throw std::invalid_argument("domination constant needs n >= 2");
  if (!w.non_decreasing()) return 1.0;
  const double Q = w.prefix_sum(n);
  if (!(Q > 0.0)) throw std::domain_error("prefix weight sum vanishes at this order");
  return (2.0 * w.q(n - 1) * static_cast<double>(n - 1) - Q) / Q;
}

MaximalResult maximal_t(const GridFunction& f, const WeightSequence& w) {
  const Basis& b = f.basis;
  const long long M = b.size();
  const SpectralFunction c = vft_forward(f);
  const auto qs = w.q_values(M + 1);
  const auto Qs = w.prefix_sums(M);

  MaximalResult r;
  r.basis = b;
  r.sup_abs.assign(static_cast<size_t>(M), 0.0);
  r.arg_n.assign(static_cast<size_t>(M), 0);

  std::vector<Complex> s(static_cast<size_t>(M)), wsum(static_cast<size_t>(M));
  CharacterSweep sweep(b);
  for (long long n = 1; n <= M; ++n) {
    if (Qs[static_cast<size_t>(n)] > 0.0) {
      const double inv = 1.0 / Qs[static_cast<size_t>(n)];
      for (long long t = 0; t < M; ++t) {
        const double v = std::abs(wsum[static_cast<size_t>(t)]) * inv;
        if (v > r.sup_abs[static_cast<size_t>(t)]) {
          r.sup_abs[static_cast<size_t>(t)] = v;
          r.arg_n[static_cast<size_t>(t)] = n;
        }
      }
    }
    const auto& row = sweep.row();  // psi_{n-1}
    const Complex cn = c.coeffs[static_cast<size_t>(n) - 1];
    for (long long t = 0; t < M; ++t) s[static_cast<size_t>(t)] += cn * row[static_cast<size_t>(t)];
    if (n < M) {
      sweep.advance();
      const double qn = qs[static_cast<size_t>(n)];
      if (qn != 0.0) {
        for (long long t = 0; t < M; ++t) wsum[static_cast<size_t>(t)] += qn * s[static_cast<size_t>(t)];
      }
    }
  }
  for (long long t = 0; t < M; ++t) {
    const double v = std::abs(s[static_cast<size_t>(t)]);  // S_{M_N} f = f
    if (v > r.sup_abs[static_cast<size_t>(t)]) {
      r.sup_abs[static_cast<size_t>(t)] = v;
      r.arg_n[static_cast<size_t>(t)] = 0;
    }
  }
  return r;
}

MaximalResult maximal_fejer(const GridFunction& f) {
  const Basis& b = f.basis;
  const long long M = b.size();
  const SpectralFunction c = vft_forward(f);

  MaximalResult r;
  r.basis = b;
  r.sup_abs.assign(static_cast<size_t>(M), 0.0);
  r.arg_n.assign(static_cast<size_t>(M), 0);

  std::vector<Complex> s(static_cast<size_t>(M)), p(static_cast<size_t>(M));
  CharacterSweep sweep(b);
  for (long long n = 1; n <= M; ++n) {
    const auto& row = sweep.row();
    const Complex cn = c.coeffs[static_cast<size_t>(n) - 1];
    const double inv = 1.0 / static_cast<double>(n);
    for (long long t = 0; t < M; ++t) {
      s[static_cast<size_t>(t)] += cn * row[static_cast<size_t>(t)];
      p[static_cast<size_t>(t)] += s[static_cast<size_t>(t)];
      const double v = std::abs(p[static_cast<size_t>(t)]) * inv;
      if (v > r.sup_abs[static_cast<size_t>(t)]) {
        r.sup_abs[static_cast<size_t>(t)] = v;
        r.arg_n[static_cast<size_t>(t)] = n;
      }
    }
    if (n < M) sweep.advance();
  }
  for (long long t = 0; t < M; ++t) {
    const double v = std::abs(s[static_cast<size_t>(t)]);
    if (v > r.sup_abs[static_cast<size_t>(t)]) {
      r.sup_abs[static_cast<size_t>(t)] = v;
      r.arg_n[static_cast<size_t>(t)] = 0;
    }
  }
  return r;
}

DominationBatch domination_batch(const SpectralFunction& c,
                                 const std::vector<WeightSequence>& kinds) {
  const Basis& b = c.basis;
  const long long M = b.size();
  const size_t Ms = static_cast<size_t>(M);
  const size_t K = kinds.size();

  std::vector<KindScalars> ks;
  ks.reserve(K);
  for (const auto& w : kinds) ks.push_back(make_scalars(w, M));

  // Planar state: running S_n, running sum of S_k, and per kind the weighted
  // running sum W_n = sum_{k<n} q_k S_k. Squared maxima to keep the hot loop
  // division- and sqrt-free.
  std::vector<double> s_re(Ms), s_im(Ms), p_re(Ms), p_im(Ms), sg2(Ms);
  std::vector<std::vector<double>> w_re(K), w_im(K), t2(K), sc2(K);
  for (size_t k = 0; k < K; ++k) {
    w_re[k].assign(Ms, 0.0);
    w_im[k].assign(Ms, 0.0);
    t2[k].assign(Ms, 0.0);
    sc2[k].assign(Ms, 0.0);
  }
  std::vector<double> row_re(Ms), row_im(Ms);
  const bool walsh = b.is_walsh();

  CharacterSweep sweep(b);
  for (long long n = 1; n <= M; ++n) {
    // T_n check first: W currently holds sum_{k<n} q_k S_k.
    for (size_t k = 0; k < K; ++k) {
      const double a2 = ks[k].inv_q2[static_cast<size_t>(n)];
      if (a2 == 0.0) continue;
      const double b2 = ks[k].inv_qc2[static_cast<size_t>(n)];
      const double* wr = w_re[k].data();
      const double* wi = w_im[k].data();
      double* tt = t2[k].data();
      double* ss = sc2[k].data();
      if (ks[k].rescaled) {
        for (size_t t = 0; t < Ms; ++t) {
          const double v = wr[t] * wr[t] + wi[t] * wi[t];
          tt[t] = std::max(tt[t], v * a2);
          ss[t] = std::max(ss[t], v * b2);
        }
      } else {
        for (size_t t = 0; t < Ms; ++t) {
          const double v = (wr[t] * wr[t] + wi[t] * wi[t]) * a2;
          tt[t] = std::max(tt[t], v);
        }
      }
    }
    // Advance S to S_n.
    {
      const auto& row = sweep.row();
      const Complex cf = c.coeffs[static_cast<size_t>(n) - 1];
      const double cr = cf.real(), ci = cf.imag();
      double* sr = s_re.data();
      double* si = s_im.data();
      if (walsh) {
        for (size_t t = 0; t < Ms; ++t) {
          const double sign = row[t].real();
          sr[t] += cr * sign;
          si[t] += ci * sign;
        }
      } else {
        for (size_t t = 0; t < Ms; ++t) {
          const double pr = row[t].real(), pi = row[t].imag();
          sr[t] += cr * pr - ci * pi;
          si[t] += cr * pi + ci * pr;
        }
      }
      if (n < M) sweep.advance();
    }
    // sigma_n = (1/n) sum_{k<=n} S_k.
    {
      const double inv = 1.0 / static_cast<double>(n);
      const double inv2 = inv * inv;
      double* pr = p_re.data();
      double* pi = p_im.data();
      const double* sr = s_re.data();
      const double* si = s_im.data();
      double* sg = sg2.data();
      for (size_t t = 0; t < Ms; ++t) {
        pr[t] += sr[t];
        pi[t] += si[t];
        const double v = (pr[t] * pr[t] + pi[t] * pi[t]) * inv2;
        sg[t] = std::max(sg[t], v);
      }
    }
    // Fold S_n into each W with weight q_n (feeds T_{n+1} onward).
    if (n < M) {
      const double* sr = s_re.data();
      const double* si = s_im.data();
      for (size_t k = 0; k < K; ++k) {
        const double qn = ks[k].q[static_cast<size_t>(n)];
        if (qn == 0.0) continue;
        double* wr = w_re[k].data();
        double* wi = w_im[k].data();
        for (size_t t = 0; t < Ms; ++t) {
          wr[t] += qn * sr[t];
          wi[t] += qn * si[t];
        }
      }
    }
  }

  DominationBatch out;
  out.sigma_star.resize(Ms);
  out.t_star.resize(K);
  out.scaled_star.resize(K);
  out.c_max.resize(K);
  for (size_t t = 0; t < Ms; ++t) {
    const double f2 = s_re[t] * s_re[t] + s_im[t] * s_im[t];  // S_{M_N} f = f
    out.sigma_star[t] = std::sqrt(std::max(sg2[t], f2));
  }
  for (size_t k = 0; k < K; ++k) {
    out.t_star[k].resize(Ms);
    out.scaled_star[k].resize(Ms);
    out.c_max[k] = ks[k].rescaled ? ks[k].c_max : 1.0;
    for (size_t t = 0; t < Ms; ++t) {
      const double f2 = s_re[t] * s_re[t] + s_im[t] * s_im[t];
      out.t_star[k][t] = std::sqrt(std::max(t2[k][t], f2));
      out.scaled_star[k][t] =
          ks[k].rescaled ? std::sqrt(sc2[k][t]) : out.t_star[k][t];
    }
  }
  return out;
}

}  // namespace vlab

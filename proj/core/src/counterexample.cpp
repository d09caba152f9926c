#include "vlab/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "vlab/common.hpp"
#include "vlab/dirichlet.hpp"
#include "vlab/means.hpp"
#include "vlab/rng.hpp"
#include "vlab/transform.hpp"

namespace vlab {

namespace {

mpz_class mpz_pow(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

void validate_inputs(long p_inverse, const std::vector<int>& pattern) {
  if (p_inverse < 3) {
    throw std::invalid_argument("counterexample: p_inverse must be an integer >= 3");
  }
  if (pattern.empty()) throw std::invalid_argument("counterexample: empty radix pattern");
  for (int m : pattern) {
    if (m < 2) throw std::invalid_argument("counterexample: radix < 2");
  }
}

// M_{alpha_k}^P / alpha_k, the exact mass entering the separation condition.
mpq_class block_mass(const CounterexampleSpec& s, std::size_t k) {
  mpq_class t(mpz_pow(s.m_alpha[k], static_cast<unsigned long>(s.p_inverse)));
  t /= s.alphas[k];
  return t;
}

// coeff_k * psi_{M_{alpha_k}}(x) + S_{M_{alpha_k}} f(x). The partial sum
// collapses to the complete blocks below k, each a difference of two
// integer-valued kernels, so the block part is real.
Complex leading_sum(const CounterexampleSpec& s, const Basis& b, std::size_t k,
                    const Point& x) {
  double blocks = 0.0;
  for (std::size_t e = 0; e < k; ++e) {
    const Complex hi = dirichlet_eval(b, s.m_alpha_next[e], x);
    const Complex lo = dirichlet_eval(b, s.m_alpha[e], x);
    blocks += s.coeff[e].get_d() * (hi.real() - lo.real());
  }
  const Complex psi = rademacher(b, static_cast<int>(s.alphas[k]), x);
  return s.coeff[k].get_d() * psi + blocks;
}

// Sufficient values of M q_{M+1}/Q_{M+2} for the /16 and /8 thresholds to
// follow from the gap condition, covering every M >= 1.
constexpr double kGateNonIncreasing = 3.0 / 14.0;
constexpr double kGateNonDecreasing = 2.0 / 7.0;

int path_divisor(const WeightSequence& w) {
  if (w.non_increasing()) return 16;
  if (w.non_decreasing()) return 8;
  throw std::invalid_argument("lower bound chain needs a monotone weight family");
}

}  // namespace

CounterexampleSpec make_counterexample(long p_inverse, std::vector<int> pattern,
                                       std::vector<long> alphas) {
  validate_inputs(p_inverse, pattern);
  if (alphas.empty()) throw std::invalid_argument("counterexample: empty level sequence");
  if (alphas.front() < 1) throw std::invalid_argument("counterexample: levels must be positive");
  for (std::size_t k = 1; k < alphas.size(); ++k) {
    if (alphas[k] <= alphas[k - 1]) {
      throw std::invalid_argument("counterexample: levels must be strictly increasing");
    }
  }

  CounterexampleSpec s;
  s.p_inverse = p_inverse;
  s.pattern = std::move(pattern);
  s.lambda = *std::max_element(s.pattern.begin(), s.pattern.end());
  s.alphas = std::move(alphas);
  s.m_alpha.reserve(s.alphas.size());
  s.m_alpha_next.reserve(s.alphas.size());
  s.coeff.reserve(s.alphas.size());

  mpz_class prod = 1;
  long lev = 0;
  for (const long a : s.alphas) {
    for (; lev < a; ++lev) {
      prod *= s.pattern[static_cast<std::size_t>(lev) % s.pattern.size()];
    }
    s.m_alpha.push_back(prod);
    s.m_alpha_next.push_back(prod * s.pattern[static_cast<std::size_t>(a) % s.pattern.size()]);
    mpq_class c(mpz_pow(prod, static_cast<unsigned long>(p_inverse - 1)));
    c /= a;
    s.coeff.push_back(c);
  }
  return s;
}

CounterexampleSpec find_alphas(long p_inverse, const std::vector<int>& pattern,
                               int count, long alpha0) {
  validate_inputs(p_inverse, pattern);
  if (count < 2) throw std::invalid_argument("counterexample: need at least two blocks");
  if (alpha0 < 1) throw std::invalid_argument("counterexample: alpha0 must be positive");

  const unsigned long P = static_cast<unsigned long>(p_inverse);
  const long lambda = *std::max_element(pattern.begin(), pattern.end());

  std::vector<long> alphas{alpha0};
  mpz_class prev_m = 1;
  for (long j = 0; j < alpha0; ++j) {
    prev_m *= pattern[static_cast<std::size_t>(j) % pattern.size()];
  }
  mpq_class mass_sum(mpz_pow(prev_m, P));
  mass_sum /= alpha0;
  mpq_class prev_mass = mass_sum;
  long prev_alpha = alpha0;

  while (static_cast<int>(alphas.size()) < count) {
    long a = prev_alpha;
    mpz_class m = prev_m;
    for (;;) {
      ++a;
      if (a - prev_alpha > (1L << 20)) {
        throw std::logic_error("counterexample: level search failed to terminate");
      }
      m *= pattern[static_cast<std::size_t>(a - 1) % pattern.size()];
      // separation: lambda * mass_sum < M_a^P / a
      mpq_class rhs(mpz_pow(m, P));
      rhs /= a;
      mpq_class lhs = mass_sum;
      lhs *= lambda;
      if (cmp(lhs, rhs) >= 0) continue;
      // gap: 32 lambda prev_mass < M_a^{P-2} / a
      mpq_class rhs_gap(mpz_pow(m, P - 2));
      rhs_gap /= a;
      mpq_class lhs_gap = prev_mass;
      lhs_gap *= 32 * lambda;
      if (cmp(lhs_gap, rhs_gap) >= 0) continue;
      break;
    }
    alphas.push_back(a);
    mpq_class mass(mpz_pow(m, P));
    mass /= a;
    mass_sum += mass;
    prev_mass = mass;
    prev_m = m;
    prev_alpha = a;
  }
  return make_counterexample(p_inverse, std::vector<int>(pattern), std::move(alphas));
}

bool separation_holds(const CounterexampleSpec& s, std::size_t k) {
  if (k >= s.blocks()) throw std::out_of_range("separation_holds: block index");
  mpq_class sum = 0;
  for (std::size_t e = 0; e < k; ++e) sum += block_mass(s, e);
  sum *= static_cast<long>(s.lambda);
  return cmp(sum, block_mass(s, k)) < 0;
}

bool gap_holds(const CounterexampleSpec& s, std::size_t k) {
  if (k == 0 || k >= s.blocks()) throw std::out_of_range("gap_holds: block index");
  mpq_class lhs = block_mass(s, k - 1);
  lhs *= 32 * static_cast<long>(s.lambda);
  mpq_class rhs(mpz_pow(s.m_alpha[k], static_cast<unsigned long>(s.p_inverse - 2)));
  rhs /= s.alphas[k];
  return cmp(lhs, rhs) < 0;
}

AlphaTailReport alpha_tail_report(const CounterexampleSpec& s) {
  AlphaTailReport r;
  const double p = 1.0 / static_cast<double>(s.p_inverse);
  for (const long a : s.alphas) {
    r.last_increment = std::pow(static_cast<double>(a), -p);
    r.partial_sum += r.last_increment;
  }
  r.min_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < s.alphas.size(); ++k) {
    r.min_ratio = std::min(r.min_ratio, static_cast<double>(s.alphas[k]) /
                                            static_cast<double>(s.alphas[k - 1]));
  }
  r.geometric = r.min_ratio >= 2.0;
  return r;
}

GridFunction build_dense(const CounterexampleSpec& s, std::size_t k_max) {
  if (k_max >= s.blocks()) throw std::out_of_range("build_dense: block index");
  const Basis b = build_basis(s.pattern, static_cast<int>(s.alphas[k_max] + 1));
  GridFunction f(b);
  for (std::size_t k = 0; k <= k_max; ++k) {
    const long long mk = b.Mk[static_cast<std::size_t>(s.alphas[k])];
    const long long mk1 = b.Mk[static_cast<std::size_t>(s.alphas[k] + 1)];
    mpq_class minus = s.coeff[k];
    minus *= s.m_alpha[k];
    mpq_class plus = s.coeff[k];
    plus *= s.m_alpha_next[k];
    const double vminus = minus.get_d();
    const double vplus = plus.get_d();
    for (long long t = 0; t < b.size(); t += mk) {
      f.values[static_cast<std::size_t>(t)] -= vminus;
    }
    for (long long t = 0; t < b.size(); t += mk1) {
      f.values[static_cast<std::size_t>(t)] += vplus;
    }
  }
  return f;
}

GridFunction atom_dense(const CounterexampleSpec& s, std::size_t k) {
  if (k >= s.blocks()) throw std::out_of_range("atom_dense: block index");
  const Basis b = build_basis(s.pattern, static_cast<int>(s.alphas[k] + 1));
  GridFunction a(b);
  const long long mk = b.Mk[static_cast<std::size_t>(s.alphas[k])];
  mpq_class scale(mpz_pow(s.m_alpha[k], static_cast<unsigned long>(s.p_inverse - 1)));
  scale /= static_cast<long>(s.lambda);
  mpq_class minus = scale;
  minus *= s.m_alpha[k];
  mpq_class plus = scale;
  plus *= s.m_alpha_next[k];
  const double vminus = minus.get_d();
  for (long long t = 0; t < b.size(); t += mk) {
    a.values[static_cast<std::size_t>(t)] = -vminus;
  }
  // The only multiple of M_{alpha_k+1} at this resolution is 0.
  a.values[0] += plus.get_d();
  return a;
}

SpectralFunction truncated_spectrum_dense(const CounterexampleSpec& s, std::size_t k) {
  if (k >= s.blocks()) throw std::out_of_range("truncated_spectrum_dense: block index");
  const Basis b = build_basis(s.pattern, static_cast<int>(s.alphas[k] + 1));
  SpectralFunction c(b);
  for (std::size_t e = 0; e < k; ++e) {
    const double v = s.coeff[e].get_d();
    const long long lo = b.Mk[static_cast<std::size_t>(s.alphas[e])];
    const long long hi = b.Mk[static_cast<std::size_t>(s.alphas[e] + 1)];
    for (long long j = lo; j < hi; ++j) c.coeffs[static_cast<std::size_t>(j)] = v;
  }
  const long long m = b.Mk[static_cast<std::size_t>(s.alphas[k])];
  c.coeffs[static_cast<std::size_t>(m)] = s.coeff[k].get_d();
  return c;
}

Complex term_II_exact(const CounterexampleSpec& s, std::size_t k,
                      const WeightSequence& w, const Point& x) {
  if (k == 0 || k >= s.blocks()) throw std::out_of_range("term_II_exact: block index");
  if (!s.m_alpha_next[k].fits_slong_p()) {
    throw std::domain_error("term_II_exact: resolution exceeds the 63-bit index range");
  }
  const Basis b = build_basis(s.pattern, static_cast<int>(s.alphas[k] + 1));
  if (x.digits.size() != static_cast<std::size_t>(b.depth())) {
    throw std::invalid_argument("term_II_exact: point has the wrong digit count");
  }
  const long long M = b.Mk[static_cast<std::size_t>(s.alphas[k])];
  const double qm = w.q(M + 1);
  const double Qm = w.prefix_sum(M + 2);
  if (!(Qm > 0.0)) throw std::domain_error("term_II_exact: prefix weight sum vanishes");
  return (qm / Qm) * leading_sum(s, b, k, x);
}

double sj_bound(const CounterexampleSpec& s, std::size_t k) {
  if (k == 0 || k >= s.blocks()) throw std::out_of_range("sj_bound: block index");
  mpq_class v(mpz_pow(s.m_alpha[k - 1], static_cast<unsigned long>(s.p_inverse)));
  v *= 4 * static_cast<long>(s.lambda);
  v /= s.alphas[k - 1];
  return v.get_d();
}

double term_I_bound(const CounterexampleSpec& s, std::size_t k) { return sj_bound(s, k); }

double chain_threshold(const CounterexampleSpec& s, std::size_t k, int divisor) {
  if (k >= s.blocks()) throw std::out_of_range("chain_threshold: block index");
  if (divisor <= 0) throw std::invalid_argument("chain_threshold: divisor must be positive");
  mpq_class t(mpz_pow(s.m_alpha[k], static_cast<unsigned long>(s.p_inverse - 2)));
  t /= divisor;
  t /= s.alphas[k];
  return t.get_d();
}

ChainReport lower_bound_chain(const CounterexampleSpec& s, std::size_t k,
                              const WeightSequence& w, std::size_t sample_points,
                              std::uint64_t seed) {
  if (k == 0 || k >= s.blocks()) throw std::out_of_range("lower_bound_chain: block index");
  if (!s.m_alpha_next[k].fits_slong_p()) {
    throw std::domain_error(
        "lower_bound_chain: resolution exceeds the 63-bit index range; no "
        "evaluation tier is available");
  }

  ChainReport r;
  r.k = k;
  r.divisor = path_divisor(w);

  const Basis b = build_basis(s.pattern, static_cast<int>(s.alphas[k] + 1));
  const long long M = b.Mk[static_cast<std::size_t>(s.alphas[k])];
  const double qm = w.q(M + 1);
  const double Qm = w.prefix_sum(M + 2);
  if (!(Qm > 0.0)) throw std::domain_error("lower_bound_chain: prefix weight sum vanishes");
  r.q_ratio = qm / Qm;
  r.c_at_m = static_cast<double>(M) * r.q_ratio;
  const double gate = r.divisor == 16 ? kGateNonIncreasing : kGateNonDecreasing;
  if (r.c_at_m < gate) {
    throw std::domain_error("lower_bound_chain: weight '" + w.label() +
                            "' achieves M q/Q = " + std::to_string(r.c_at_m) +
                            " at M = " + std::to_string(M) + ", below the " +
                            std::to_string(gate) +
                            " gate; the pointwise threshold is not certified");
  }

  r.threshold = chain_threshold(s, k, r.divisor);
  r.i_bound = term_I_bound(s, k);
  r.min_abs_ii = std::numeric_limits<double>::infinity();
  r.min_margin = std::numeric_limits<double>::infinity();
  std::size_t hits = 0;

  const auto visit = [&](const Point& x) {
    const double a = std::abs(r.q_ratio * leading_sum(s, b, k, x));
    const double margin = a - r.i_bound;
    r.min_abs_ii = std::min(r.min_abs_ii, a);
    r.min_margin = std::min(r.min_margin, margin);
    if (margin >= r.threshold) ++hits;
  };

  if (b.size() <= dense_cap()) {
    r.dense = true;
    r.points = static_cast<std::size_t>(b.size());
    for (long long t = 0; t < b.size(); ++t) visit(index_to_digits(b, t));
  } else {
    if (sample_points == 0) {
      throw std::invalid_argument("lower_bound_chain: zero sample points");
    }
    r.dense = false;
    r.points = sample_points;
    SplitMix64 gen(seed ^ (0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(k) + 1)));
    for (std::size_t i = 0; i < sample_points; ++i) visit(random_point(b, gen));
  }

  r.pass_fraction = static_cast<double>(hits) / static_cast<double>(r.points);
  r.passed = hits == r.points;
  return r;
}

DenseChainReport dense_chain_check(const CounterexampleSpec& s, std::size_t k,
                                   const WeightSequence& w) {
  if (k == 0 || k >= s.blocks()) throw std::out_of_range("dense_chain_check: block index");
  const SpectralFunction spectrum = truncated_spectrum_dense(s, k);
  const Basis& b = spectrum.basis;
  const long long M = b.Mk[static_cast<std::size_t>(s.alphas[k])];

  DenseChainReport r;
  r.threshold = chain_threshold(s, k, path_divisor(w));
  r.i_bound = term_I_bound(s, k);
  r.sj_limit = sj_bound(s, k);

  const double qm = w.q(M + 1);
  const double Qm = w.prefix_sum(M + 2);
  if (!(Qm > 0.0)) throw std::domain_error("dense_chain_check: prefix weight sum vanishes");
  const double scale = qm / Qm;

  const GridFunction t = t_mean_from_spectrum(spectrum, w, M + 2).value;
  // Nothing sits above index M, so full synthesis equals S_{M+1} f.
  const GridFunction synth = vft_inverse(spectrum);

  r.min_abs_t = std::numeric_limits<double>::infinity();
  for (long long idx = 0; idx < b.size(); ++idx) {
    const std::size_t u = static_cast<std::size_t>(idx);
    const Complex dense_ii = scale * synth.values[u];
    const Complex closed_ii = scale * leading_sum(s, b, k, index_to_digits(b, idx));
    const double denom = std::max(std::abs(dense_ii), 1e-300);
    r.max_rel_ii_gap = std::max(r.max_rel_ii_gap, std::abs(closed_ii - dense_ii) / denom);
    r.max_abs_i = std::max(r.max_abs_i, std::abs(t.values[u] - dense_ii));
    r.min_abs_t = std::min(r.min_abs_t, std::abs(t.values[u]));
  }

  double sj2 = 0.0;
  PartialSumSweep sweep(spectrum);
  for (;;) {
    for (const Complex& v : sweep.values()) sj2 = std::max(sj2, std::norm(v));
    if (sweep.n() >= M) break;
    sweep.advance();
  }
  r.max_abs_sj = std::sqrt(sj2);

  r.passed = r.min_abs_t >= r.threshold && r.max_abs_i <= r.i_bound &&
             r.max_abs_sj <= r.sj_limit && r.max_rel_ii_gap <= 1e-8;
  return r;
}

double divergence_ratio(const CounterexampleSpec& s, std::size_t k) {
  return chain_threshold(s, k, 16);
}

double hp_bound(const CounterexampleSpec& s, std::size_t k_max) {
  if (k_max >= s.blocks()) throw std::out_of_range("hp_bound: block index");
  const double p = 1.0 / static_cast<double>(s.p_inverse);
  double sum = 0.0;
  for (std::size_t k = 0; k <= k_max; ++k) {
    sum += std::pow(static_cast<double>(s.alphas[k]), -p);
  }
  return static_cast<double>(s.lambda) * std::pow(sum, 1.0 / p);
}

}  // namespace vlab

#include "vlab/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "vlab/counterexample.hpp"
#include "vlab/csv.hpp"
#include "vlab/martingale.hpp"
#include "vlab/maximal.hpp"
#include "vlab/means.hpp"
#include "vlab/norms.hpp"
#include "vlab/rng.hpp"
#include "vlab/transform.hpp"

namespace vlab {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point a,
                  std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

}  // namespace

int run_transform(const ExperimentConfig& c, std::ostream& csv, std::ostream& log) {
  const Basis b = build_basis(c.m, c.depth);
  const GridFunction f = random_complex_grid(b, c.seed);

  const auto t0 = std::chrono::steady_clock::now();
  const SpectralFunction fast = vft_forward(f);
  const auto t1 = std::chrono::steady_clock::now();
  const SpectralFunction slow = vft_forward_naive(f);
  const auto t2 = std::chrono::steady_clock::now();

  double max_abs = 0.0;
  for (std::size_t i = 0; i < fast.coeffs.size(); ++i) {
    max_abs = std::max(max_abs, std::abs(fast.coeffs[i] - slow.coeffs[i]));
  }

  long double space = 0.0L;
  for (const Complex& v : f.values) space += static_cast<long double>(std::norm(v));
  space /= static_cast<long double>(b.size());
  long double freq = 0.0L;
  for (const Complex& v : fast.coeffs) freq += static_cast<long double>(std::norm(v));
  const double parseval_rel =
      static_cast<double>(std::abs(space - freq) / std::max(space, 1e-300L));

  csv << csv_row({"basis", "M_N", "max_abs_err", "parseval_rel_err", "fast_ms", "naive_ms"});
  csv << csv_row({b.label(), std::to_string(b.size()), fmt_sci(max_abs),
                  fmt_sci(parseval_rel),
                  c.timings ? fmt_shortest(elapsed_ms(t0, t1)) : "",
                  c.timings ? fmt_shortest(elapsed_ms(t1, t2)) : ""});

  int code = 0;
  if (!(max_abs <= 1e-9)) {
    log << "transform: fast/naive gap " << fmt_sci(max_abs) << " exceeds 1e-9\n";
    code = 1;
  }
  if (!(parseval_rel <= 1e-12)) {
    log << "transform: energy mismatch " << fmt_sci(parseval_rel) << " exceeds 1e-12\n";
    code = 1;
  }
  return code;
}

int run_maximal(const ExperimentConfig& c, std::ostream& csv, std::ostream& log) {
  const Basis b = build_basis(c.m, c.depth);
  std::vector<WeightSequence> kinds;
  kinds.reserve(c.kinds.size());
  for (const WeightSpec& s : c.kinds) kinds.emplace_back(s);

  const std::size_t kind_count = kinds.size();
  std::vector<double> sup_ratio(kind_count, 0.0);
  std::vector<double> min_margin(kind_count, std::numeric_limits<double>::infinity());

  for (int i = 0; i < c.samples; ++i) {
    const GridFunction f = random_complex_grid(b, derive_seed(c.seed, static_cast<std::uint64_t>(i)));
    const SpectralFunction spectrum = vft_forward(f);
    const DominationBatch batch = domination_batch(spectrum, kinds);
    const double hp = hp_norm(f, c.p);
    for (std::size_t k = 0; k < kind_count; ++k) {
      if (hp > 0.0) {
        sup_ratio[k] = std::max(sup_ratio[k], weak_lp(batch.t_star[k], c.p) / hp);
      }
      const double cval = kinds[k].non_increasing() ? 1.0 : batch.c_max[k];
      const std::vector<double>& ts = batch.t_star[k];
      for (std::size_t t = 0; t < ts.size(); ++t) {
        min_margin[k] = std::min(min_margin[k], cval * batch.sigma_star[t] - ts[t]);
      }
    }
  }

  csv << csv_row({"kind", "n_range", "sup_ratio_weakLp_over_Hp", "domination_margin"});
  int code = 0;
  const std::string range = "1.." + std::to_string(b.size());
  for (std::size_t k = 0; k < kind_count; ++k) {
    csv << csv_row({kinds[k].label(), range, fmt_sci(sup_ratio[k]), fmt_sci(min_margin[k])});
    if (!(min_margin[k] >= -1e-9)) {
      log << "maximal: domination margin " << fmt_sci(min_margin[k]) << " for "
          << kinds[k].label() << " below -1e-9\n";
      code = 1;
    }
  }
  return code;
}

int run_counterexample(const ExperimentConfig& c, std::ostream& csv, std::ostream& log) {
  const CounterexampleSpec s = find_alphas(c.p_inverse, c.m, c.count, c.alpha0);
  const WeightSequence w{c.chain_kind};

  csv << csv_row({"alpha_k", "M_alpha_k", "threshold_155aba2", "min_sample_margin",
                  "hp_bound", "ratio", "separation", "gap"});
  int code = 0;
  for (std::size_t k = 0; k < s.blocks(); ++k) {
    const bool sep = separation_holds(s, k);
    const bool gap = k >= 1 ? gap_holds(s, k) : true;
    if (!sep || !gap) {
      log << "counterexample: exact growth condition failed at block " << k << "\n";
      code = 1;
    }

    double threshold = divergence_ratio(s, k);
    std::string margin_cell;
    if (k >= 1) {
      if (s.m_alpha_next[k].fits_slong_p()) {
        const ChainReport r = lower_bound_chain(s, k, w, static_cast<std::size_t>(c.sample_points), c.seed);
        threshold = r.threshold;
        margin_cell = fmt_sci(r.min_margin);
        if (!r.passed) {
          log << "counterexample: lower bound failed at block " << k << " ("
              << (r.dense ? "dense" : "sampled") << ", min margin "
              << fmt_sci(r.min_margin) << " vs threshold " << fmt_sci(r.threshold)
              << ")\n";
          code = 1;
        }
      } else {
        log << "counterexample: block " << k
            << " is beyond both evaluation tiers; exact conditions only\n";
      }
    }

    const double hp = hp_bound(s, k);
    csv << csv_row({std::to_string(s.alphas[k]), s.m_alpha[k].get_str(),
                    fmt_sci(threshold), margin_cell, fmt_sci(hp),
                    fmt_sci(divergence_ratio(s, k) / hp), sep ? "pass" : "fail",
                    k >= 1 ? (gap ? "pass" : "fail") : ""});
  }
  return code;
}

int run_converge(const ExperimentConfig& c, std::ostream& csv, std::ostream& log) {
  if (c.spectrum_level >= c.depth) {
    throw std::invalid_argument("converge: spectrum_level must be below depth");
  }
  const Basis b = build_basis(c.m, c.depth);
  const long long mj = b.Mk[static_cast<std::size_t>(c.spectrum_level)];
  const SpectralFunction spectrum = random_spectrum_below(b, mj, c.seed);
  const GridFunction f = vft_inverse(spectrum);

  // max over k < M_j of ||S_k f - f||_inf; the k = 0 term is ||f||_inf.
  double base = sup_norm(f);
  {
    PartialSumSweep sweep(spectrum);
    while (true) {
      const std::vector<Complex>& s = sweep.values();
      double gap = 0.0;
      for (std::size_t t = 0; t < s.size(); ++t) {
        gap = std::max(gap, std::abs(s[t] - f.values[t]));
      }
      base = std::max(base, gap);
      if (sweep.n() + 1 >= mj) break;
      sweep.advance();
    }
  }

  std::vector<long long> ns;
  const double lm = std::log(static_cast<double>(b.size()));
  for (int i = 0; i < c.grid; ++i) {
    const double e = lm * static_cast<double>(i) / static_cast<double>(c.grid - 1);
    long long n = std::llround(std::exp(e));
    n = std::clamp(n, 1LL, b.size());
    if (ns.empty() || ns.back() != n) ns.push_back(n);
  }

  csv << csv_row({"kind", "n", "sup_error", "certified_bound"});
  int code = 0;
  for (const WeightSpec& ks : c.kinds) {
    const WeightSequence w(ks);
    const double qj = w.prefix_sum(mj);
    for (const long long n : ns) {
      const double qn = w.prefix_sum(n);
      if (!(qn > 0.0)) continue;  // the mean of this order is undefined
      const GridFunction tn = t_mean_from_spectrum(spectrum, w, n).value;
      double err = 0.0;
      for (std::size_t t = 0; t < tn.values.size(); ++t) {
        err = std::max(err, std::abs(tn.values[t] - f.values[t]));
      }
      const double bound = qj / qn * base;
      csv << csv_row({w.label(), std::to_string(n), fmt_sci(err), fmt_sci(bound)});
      if (!(err <= bound + 1e-9)) {
        log << "converge: " << w.label() << " at n = " << n << " exceeds the certified bound\n";
        code = 1;
      }
    }
  }
  return code;
}

}  // namespace vlab

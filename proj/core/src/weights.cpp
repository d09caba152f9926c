#include "vlab/weights.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "vlab/common.hpp"
#include "vlab/csv.hpp"

namespace vlab {

namespace {

// Direct summation below this; closed forms / Euler-Maclaurin tails above.
constexpr long long kDirectCutoff = 100000;
constexpr long double kEulerGamma = 0.5772156649015328606065120900824024310422L;

double iterlog_q(double alpha, int beta, long long k) {
  if (k <= 0) return 0.0;
  double v = alpha * std::log(static_cast<double>(k));
  for (int i = 1; i < beta; ++i) {
    if (v <= 0.0) return 0.0;
    v = std::log(v);
  }
  return v > 0.0 ? v : 0.0;
}

// ln Gamma(z+a) - ln Gamma(z) for z > kDirectCutoff, evaluated without the
// cancellation that kills a plain lgamma difference:
//   a ln z + (z+a-1/2) log1p(a/z) - a - a/(12 z (z+a)) + O(z^-3).
long double lgamma_ratio_large(long double z, long double a) {
  return a * logl(z) + (z + a - 0.5L) * log1pl(a / z) - a -
         a / (12.0L * z * (z + a));
}

// H_m with the standard asymptotic series; ln m passed in so big-integer
// callers can supply it, m_inv = 1/m (0 when m exceeds long double range).
long double harmonic_large(long double ln_m, long double m_inv) {
  const long double i2 = m_inv * m_inv;
  return ln_m + kEulerGamma + m_inv / 2.0L - i2 / 12.0L + i2 * i2 / 120.0L;
}

// sum_{k=1}^{m} k^s for s in (-1,0) and m > kDirectCutoff: direct below the
// cutoff, Euler-Maclaurin with endpoint corrections through the third
// derivative from there (relative error ~ B^-4).
long double power_sum_large(long double s, long double ln_m) {
  const long long B = kDirectCutoff;
  long double acc = 0.0L;
  for (long long k = 1; k < B; ++k) acc += powl(static_cast<long double>(k), s);
  const long double lnB = logl(static_cast<long double>(B));
  auto pm = [&](long double e) { return expl(e * ln_m); };
  auto pB = [&](long double e) { return expl(e * lnB); };
  acc += (pm(s + 1) - pB(s + 1)) / (s + 1);
  acc += (pB(s) + pm(s)) * 0.5L;
  acc += s * (pm(s - 1) - pB(s - 1)) / 12.0L;
  acc -= s * (s - 1) * (s - 2) * (pm(s - 3) - pB(s - 3)) / 720.0L;
  return acc;
}

// int_{u0}^{u1} e^u / u du by composite Simpson; step chosen so the h^4
// truncation sits below long double noise for the ranges used here.
long double exp_integral_tail(long double u0, long double u1) {
  auto f = [](long double u) { return expl(u) / u; };
  long long n = static_cast<long long>((u1 - u0) / 0.002L) + 2;
  n = std::clamp<long long>(n + (n & 1), 64, 1 << 20);
  const long double h = (u1 - u0) / static_cast<long double>(n);
  long double s = f(u0) + f(u1);
  for (long long i = 1; i < n; ++i)
    s += f(u0 + h * static_cast<long double>(i)) * ((i & 1) ? 4.0L : 2.0L);
  return s * h / 3.0L;
}

// sum_{k=B}^{m} ln(alpha ln k), requiring alpha ln B > 1 so the clamp in the
// weight definition is inactive on the whole tail. The antiderivative is
// x ln(alpha ln x) - li(x).
long double iterlog2_tail(long double alpha, long double m_ld, long double ln_m) {
  const long long B = kDirectCutoff;
  const long double Bl = static_cast<long double>(B);
  const long double u0 = logl(Bl);
  const long double u1 = ln_m;
  const long double gB = logl(alpha * u0);
  const long double gm = logl(alpha * u1);
  long double acc = m_ld * gm - Bl * gB - exp_integral_tail(u0, u1);
  acc += 0.5L * (gB + gm);
  acc += (1.0L / (m_ld * u1) - 1.0L / (Bl * u0)) / 12.0L;
  return acc;
}

bool takes_alpha(WeightKind k) {
  return k == WeightKind::cesaro || k == WeightKind::inverse_cesaro ||
         k == WeightKind::power || k == WeightKind::iterlog;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view s) {
  s = trim(s);
  double v = 0.0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad numeric weight parameter: '" + std::string(s) + "'");
  }
  return v;
}

int parse_int(std::string_view s) {
  s = trim(s);
  int v = 0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad integer weight parameter: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

WeightSpec parse_weight_spec(std::string_view text) {
  const auto s = trim(text);
  std::string_view name = s;
  std::vector<std::string_view> args;
  const auto open = s.find('(');
  if (open != std::string_view::npos) {
    if (s.back() != ')') throw std::invalid_argument("unbalanced parentheses in weight spec");
    name = trim(s.substr(0, open));
    std::string_view inner = s.substr(open + 1, s.size() - open - 2);
    size_t start = 0;
    while (true) {
      const auto comma = inner.find(',', start);
      if (comma == std::string_view::npos) {
        args.push_back(inner.substr(start));
        break;
      }
      args.push_back(inner.substr(start, comma - start));
      start = comma + 1;
    }
  }
  WeightSpec spec;
  size_t want = 0;
  if (name == "fejer") {
    spec.kind = WeightKind::fejer;
  } else if (name == "cesaro") {
    spec.kind = WeightKind::cesaro;
    want = 1;
  } else if (name == "inverse_cesaro") {
    spec.kind = WeightKind::inverse_cesaro;
    want = 1;
  } else if (name == "power") {
    spec.kind = WeightKind::power;
    want = 1;
  } else if (name == "riesz") {
    spec.kind = WeightKind::riesz;
  } else if (name == "norlund_log") {
    spec.kind = WeightKind::norlund_log;
  } else if (name == "iterlog") {
    spec.kind = WeightKind::iterlog;
    want = 2;
  } else {
    throw std::invalid_argument("unknown weight kind: '" + std::string(name) + "'");
  }
  if (args.size() != want) {
    throw std::invalid_argument("weight kind '" + std::string(name) + "' takes " +
                                std::to_string(want) + " parameter(s)");
  }
  if (want >= 1) spec.alpha = parse_real(args[0]);
  if (want == 2) spec.beta = parse_int(args[1]);
  return WeightSequence(spec).spec();  // reuse the constructor's range checks
}

std::string weight_label(const WeightSpec& spec) {
  switch (spec.kind) {
    case WeightKind::fejer: return "fejer";
    case WeightKind::riesz: return "riesz";
    case WeightKind::norlund_log: return "norlund_log";
    case WeightKind::cesaro: return "cesaro(" + fmt_shortest(spec.alpha) + ")";
    case WeightKind::inverse_cesaro:
      return "inverse_cesaro(" + fmt_shortest(spec.alpha) + ")";
    case WeightKind::power: return "power(" + fmt_shortest(spec.alpha) + ")";
    case WeightKind::iterlog:
      return "iterlog(" + fmt_shortest(spec.alpha) + "," + std::to_string(spec.beta) + ")";
  }
  throw std::logic_error("unhandled weight kind");
}

WeightSequence::WeightSequence(WeightSpec spec) : spec_(spec) {
  if (!takes_alpha(spec.kind)) spec_.alpha = 0.0;
  if (spec.kind != WeightKind::iterlog) spec_.beta = 0;
  switch (spec_.kind) {
    case WeightKind::fejer:
      non_increasing_ = true;
      non_decreasing_ = true;
      break;
    case WeightKind::cesaro:
    case WeightKind::inverse_cesaro:
    case WeightKind::power:
      if (!(spec_.alpha > 0.0 && spec_.alpha < 1.0)) {
        throw std::invalid_argument("alpha must lie in (0,1) for " + weight_label(spec_));
      }
      non_increasing_ = true;
      break;
    case WeightKind::riesz:
    case WeightKind::norlund_log:
      non_increasing_ = true;
      monotone_from_ = 1;  // q_0 = 0 precedes the decreasing run
      break;
    case WeightKind::iterlog:
      if (!(spec_.alpha > 0.0)) throw std::invalid_argument("iterlog alpha must be positive");
      if (spec_.beta < 1) throw std::invalid_argument("iterlog beta must be >= 1");
      non_decreasing_ = true;
      break;
  }
}

double WeightSequence::q(long long k) const {
  if (k < 0) throw std::out_of_range("negative weight index");
  switch (spec_.kind) {
    case WeightKind::fejer: return 1.0;
    case WeightKind::riesz:
    case WeightKind::norlund_log:
      return k == 0 ? 0.0 : 1.0 / static_cast<double>(k);
    case WeightKind::power:
      return k == 0 ? 1.0 : std::pow(static_cast<double>(k), spec_.alpha - 1.0);
    case WeightKind::cesaro:
    case WeightKind::inverse_cesaro: {
      if (k <= kDirectCutoff) {
        long double a = 1.0L;
        for (long long j = 1; j <= k; ++j)
          a *= (static_cast<long double>(j) + spec_.alpha - 1.0L) / static_cast<long double>(j);
        return static_cast<double>(a);
      }
      const long double d = lgamma_ratio_large(static_cast<long double>(k) + 1.0L,
                                               static_cast<long double>(spec_.alpha) - 1.0L);
      return static_cast<double>(expl(d - lgammal(static_cast<long double>(spec_.alpha))));
    }
    case WeightKind::iterlog: return iterlog_q(spec_.alpha, spec_.beta, k);
  }
  throw std::logic_error("unhandled weight kind");
}

std::vector<double> WeightSequence::q_values(long long n) const {
  if (n < 0) throw std::out_of_range("negative weight count");
  require_dense(n);
  std::vector<double> out(static_cast<size_t>(n));
  switch (spec_.kind) {
    case WeightKind::fejer:
      std::fill(out.begin(), out.end(), 1.0);
      break;
    case WeightKind::riesz:
    case WeightKind::norlund_log:
      for (long long k = 1; k < n; ++k) out[k] = 1.0 / static_cast<double>(k);
      break;
    case WeightKind::power:
      if (n > 0) out[0] = 1.0;
      for (long long k = 1; k < n; ++k)
        out[k] = std::pow(static_cast<double>(k), spec_.alpha - 1.0);
      break;
    case WeightKind::cesaro:
    case WeightKind::inverse_cesaro: {
      long double a = 1.0L;
      for (long long k = 0; k < n; ++k) {
        if (k > 0)
          a *= (static_cast<long double>(k) + spec_.alpha - 1.0L) / static_cast<long double>(k);
        out[k] = static_cast<double>(a);
      }
      break;
    }
    case WeightKind::iterlog:
      for (long long k = 0; k < n; ++k) out[k] = iterlog_q(spec_.alpha, spec_.beta, k);
      break;
  }
  return out;
}

std::vector<double> WeightSequence::prefix_sums(long long n) const {
  const auto qs = q_values(n);
  std::vector<double> out(static_cast<size_t>(n) + 1);
  long double acc = 0.0L;
  out[0] = 0.0;
  for (long long k = 0; k < n; ++k) {
    acc += qs[k];
    out[k + 1] = static_cast<double>(acc);
  }
  return out;
}

double WeightSequence::prefix_sum(long long n) const {
  if (n < 0) throw std::out_of_range("negative prefix length");
  if (n <= kDirectCutoff) {
    const auto qs = q_values(n);
    long double acc = 0.0L;
    for (double v : qs) acc += v;
    return static_cast<double>(acc);
  }
  const long double alpha = spec_.alpha;
  const long double m = static_cast<long double>(n - 1);
  const long double ln_m = logl(m);
  switch (spec_.kind) {
    case WeightKind::fejer: return static_cast<double>(n);
    case WeightKind::riesz:
    case WeightKind::norlund_log:
      return static_cast<double>(harmonic_large(ln_m, 1.0L / m));
    case WeightKind::power:
      return static_cast<double>(1.0L + power_sum_large(alpha - 1.0L, ln_m));
    case WeightKind::cesaro:
    case WeightKind::inverse_cesaro:
      return static_cast<double>(
          expl(lgamma_ratio_large(static_cast<long double>(n), alpha) - lgammal(alpha + 1.0L)));
    case WeightKind::iterlog: {
      if (spec_.beta == 1) {
        return static_cast<double>(alpha * lgammal(static_cast<long double>(n)));
      }
      if (spec_.beta == 2 &&
          alpha * logl(static_cast<long double>(kDirectCutoff)) > 1.0L + 1e-9L) {
        long double acc = 0.0L;
        for (long long k = 0; k < kDirectCutoff; ++k)
          acc += iterlog_q(spec_.alpha, spec_.beta, k);
        return static_cast<double>(acc + iterlog2_tail(alpha, m, ln_m));
      }
      throw std::domain_error("no analytic prefix form for " + label() +
                              " beyond the direct range");
    }
  }
  throw std::logic_error("unhandled weight kind");
}

double WeightSequence::prefix_sum(const mpz_class& n) const {
  if (n < 0) throw std::out_of_range("negative prefix length");
  if (mpz_fits_slong_p(n.get_mpz_t())) {
    return prefix_sum(static_cast<long long>(mpz_get_si(n.get_mpz_t())));
  }
  // n >= 2^63 from here on; 1/n corrections are below long double noise.
  const long double alpha = spec_.alpha;
  const long double ln_n = log_big(n);
  const long double n_ld = expl(ln_n);
  switch (spec_.kind) {
    case WeightKind::fejer: return mpz_get_d(n.get_mpz_t());
    case WeightKind::riesz:
    case WeightKind::norlund_log:
      return static_cast<double>(harmonic_large(ln_n, 0.0L));
    case WeightKind::power:
      return static_cast<double>(1.0L + power_sum_large(alpha - 1.0L, ln_n));
    case WeightKind::cesaro:
    case WeightKind::inverse_cesaro: {
      const long double lnq = std::isfinite(n_ld) ? lgamma_ratio_large(n_ld, alpha)
                                                  : alpha * ln_n;  // n -> inf limit
      return static_cast<double>(expl(lnq - lgammal(alpha + 1.0L)));
    }
    case WeightKind::iterlog: {
      if (!std::isfinite(n_ld)) {
        throw std::domain_error("prefix argument exceeds long double range for " + label());
      }
      if (spec_.beta == 1) {
        // Stirling for ln Gamma(n)
        const long double lg = (n_ld - 0.5L) * ln_n - n_ld +
                               0.5L * logl(2.0L * std::numbers::pi_v<long double>) +
                               1.0L / (12.0L * n_ld);
        return static_cast<double>(alpha * lg);
      }
      if (spec_.beta == 2 &&
          alpha * logl(static_cast<long double>(kDirectCutoff)) > 1.0L + 1e-9L) {
        long double acc = 0.0L;
        for (long long k = 0; k < kDirectCutoff; ++k)
          acc += iterlog_q(spec_.alpha, spec_.beta, k);
        return static_cast<double>(acc + iterlog2_tail(alpha, n_ld, ln_n));
      }
      throw std::domain_error("no analytic prefix form for " + label() +
                              " beyond the direct range");
    }
  }
  throw std::logic_error("unhandled weight kind");
}

AbelIdentity abel_weight_identity(const WeightSequence& w, long long n) {
  if (n < 2) throw std::invalid_argument("identity needs n >= 2");
  const auto qs = w.q_values(n);
  long double rhs = qs[0];
  for (long long j = 0; j + 1 < n; ++j) {
    rhs += (static_cast<long double>(qs[j]) - qs[j + 1]) * static_cast<long double>(j);
  }
  rhs += static_cast<long double>(qs[n - 1]) * static_cast<long double>(n - 1);
  return AbelIdentity{w.prefix_sum(n), static_cast<double>(rhs)};
}

WeightConditionReport condition_checks(const WeightSequence& w, long long n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  const auto qs = w.q_values(n_max + 2);
  const auto Qs = w.prefix_sums(n_max + 2);
  WeightConditionReport rep;
  double sup = 0.0;
  long long sup_arg = 0;
  double inf = std::numeric_limits<double>::infinity();
  long long inf_arg = 0;
  for (long long n = 1; n <= n_max; ++n) {
    if (Qs[n] > 0.0) {
      const double r = static_cast<double>(n) * qs[n - 1] / Qs[n];
      if (r > sup) {
        sup = r;
        sup_arg = n;
      }
    }
    if (Qs[n + 2] > 0.0) {
      const double r = static_cast<double>(n) * qs[n + 1] / Qs[n + 2];
      if (r < inf) {
        inf = r;
        inf_arg = n;
      }
    }
  }
  rep.sup_n_q_over_Q = sup;
  rep.sup_arg = sup_arg;
  rep.inf_n_q_over_Q = std::isinf(inf) ? 0.0 : inf;
  rep.inf_arg = inf_arg;
  rep.q_total = Qs[n_max];
  return rep;
}

long double log_big(const mpz_class& n) {
  if (n <= 0) throw std::domain_error("log of a non-positive big integer");
  long e = 0;
  const double d = mpz_get_d_2exp(&e, n.get_mpz_t());
  return logl(static_cast<long double>(d)) +
         static_cast<long double>(e) * std::numbers::ln2_v<long double>;
}

}  // namespace vlab

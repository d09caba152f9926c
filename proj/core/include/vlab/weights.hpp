#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace vlab {

// Weight families for the summation means. Each kind fixes the sequence
// {q_k} and its monotonicity; the prefix sums Q_n = q_0 + ... + q_{n-1}
// have closed or asymptotic forms so they stay available for n far beyond
// any dense grid. Logs are natural throughout.
enum class WeightKind {
  fejer,           // q_k = 1
  cesaro,          // q_k = A_k^{alpha-1}, A_j^s = binom(j+s, j); reverse order
  inverse_cesaro,  // same weights, forward order
  power,           // q_0 = 1, q_k = k^{alpha-1}
  riesz,           // q_0 = 0, q_k = 1/k
  norlund_log,     // same weights as riesz, reverse order
  iterlog,         // q_0 = 0, q_k = log^(beta)(k^alpha), clamped at 0
};

struct WeightSpec {
  WeightKind kind = WeightKind::fejer;
  double alpha = 0.0;  // power/cesaro/inverse_cesaro need alpha in (0,1); iterlog alpha > 0
  int beta = 0;        // iterlog iteration depth, >= 1

  bool operator==(const WeightSpec&) const = default;
};

// Accepts "fejer", "riesz", "norlund_log", "power(0.5)", "cesaro(0.25)",
// "inverse_cesaro(0.5)", "iterlog(1,2)". Throws std::invalid_argument on
// unknown names or out-of-range parameters.
WeightSpec parse_weight_spec(std::string_view text);

// Canonical spelling; parse_weight_spec(weight_label(s)) == s exactly.
std::string weight_label(const WeightSpec& spec);

class WeightSequence {
 public:
  explicit WeightSequence(WeightSpec spec);

  const WeightSpec& spec() const { return spec_; }
  WeightKind kind() const { return spec_.kind; }
  std::string label() const { return weight_label(spec_); }

  double q(long long k) const;

  // q_0 .. q_{n-1} in one pass (cesaro kinds use the stable ratio recurrence).
  std::vector<double> q_values(long long n) const;

  // Q_n = q_0 + ... + q_{n-1}. Exact summation below an internal cutoff,
  // closed forms or Euler-Maclaurin tails beyond it. iterlog with beta >= 3
  // (or beta = 2 with alpha too small for the clamp to resolve below the
  // cutoff) has no analytic tail and throws std::domain_error there.
  double prefix_sum(long long n) const;
  double prefix_sum(const mpz_class& n) const;

  // Q_0 .. Q_n cumulatively (n+1 entries), same summation order as prefix_sum.
  std::vector<double> prefix_sums(long long n) const;

  bool non_increasing() const { return non_increasing_; }
  bool non_decreasing() const { return non_decreasing_; }
  // Index from which the declared monotonicity holds (riesz/norlund_log start
  // at q_0 = 0 before the decreasing run begins at k = 1).
  long long monotone_from() const { return monotone_from_; }

 private:
  WeightSpec spec_;
  bool non_increasing_ = false;
  bool non_decreasing_ = false;
  long long monotone_from_ = 0;
};

// Both sides of the weight identity obtained by Abel transformation:
//   Q_n = q_0 + sum_{j=0}^{n-2} (q_j - q_{j+1}) j + q_{n-1} (n-1).
// (The q_0 term is invisible when q_0 = 0 but required in general.)
struct AbelIdentity {
  double lhs;
  double rhs;
};
AbelIdentity abel_weight_identity(const WeightSequence& w, long long n);

// Scan of the two normalized weight ratios that drive the boundedness and
// divergence results, over 1 <= n <= n_max (rows with Q = 0 skipped).
struct WeightConditionReport {
  double sup_n_q_over_Q = 0.0;  // sup of n * q_{n-1} / Q_n; finite sup is the
                                // hypothesis for the maximal-operator bound
  long long sup_arg = 0;
  double inf_n_q_over_Q = 0.0;  // inf of n * q_{n+1} / Q_{n+2}; a positive inf
                                // is the lower-ratio hypothesis used by the
                                // divergence construction
  long long inf_arg = 0;
  double q_total = 0.0;         // Q_{n_max}; grows without bound iff the mean
                                // is regular
};
WeightConditionReport condition_checks(const WeightSequence& w, long long n_max);

// ln(n) for big integers, exact to long double precision.
long double log_big(const mpz_class& n);

}  // namespace vlab

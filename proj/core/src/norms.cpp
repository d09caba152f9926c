#include "vlab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vlab/common.hpp"

namespace vlab {

namespace {

void require_positive_p(double p) {
  if (!(p > 0.0)) throw std::invalid_argument("norm exponent must be positive");
}

std::vector<double> abs_values(const GridFunction& f) {
  std::vector<double> v(f.values.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = std::abs(f.values[i]);
  return v;
}

}  // namespace

double lp_norm(const std::vector<double>& v, double p) {
  require_positive_p(p);
  if (v.empty()) return 0.0;
  std::vector<double> powers(v.size());
  for (size_t i = 0; i < v.size(); ++i) powers[i] = std::pow(std::abs(v[i]), p);
  const double mean = pairwise_sum<double>(powers) / static_cast<double>(v.size());
  return std::pow(mean, 1.0 / p);
}

double lp_norm(const GridFunction& f, double p) { return lp_norm(abs_values(f), p); }

double sup_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s = std::max(s, std::abs(x));
  return s;
}

double sup_norm(const GridFunction& f) {
  double s = 0.0;
  for (const Complex& x : f.values) s = std::max(s, std::abs(x));
  return s;
}

double weak_lp(const std::vector<double>& v, double p) {
  require_positive_p(p);
  if (v.empty()) return 0.0;
  std::vector<double> sorted(v.size());
  for (size_t i = 0; i < v.size(); ++i) sorted[i] = std::abs(v[i]);
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());
  const double M = static_cast<double>(sorted.size());
  double best = 0.0;
  for (size_t i = 0; i < sorted.size(); ++i) {
    best = std::max(best, sorted[i] * std::pow((static_cast<double>(i) + 1.0) / M, 1.0 / p));
  }
  return best;
}

double weak_lp(const GridFunction& f, double p) { return weak_lp(abs_values(f), p); }

}  // namespace vlab

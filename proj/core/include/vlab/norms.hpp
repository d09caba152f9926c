#pragma once

#include <vector>

#include "vlab/grid.hpp"

namespace vlab {

// ((1/M) sum |f|^p)^{1/p}; requires p > 0. The vector overloads treat the
// entries as samples on the uniform grid (absolute values taken internally).
double lp_norm(const GridFunction& f, double p);
double lp_norm(const std::vector<double>& v, double p);

double sup_norm(const GridFunction& f);
double sup_norm(const std::vector<double>& v);

// sup_{s>0} s * mu(|f| > s)^{1/p}, attained exactly on the grid: with |f|
// sorted descending, the sup is max_i |f|_(i) * ((i+1)/M)^{1/p}. Tied values
// collapse into the last index of their block, which the max absorbs.
double weak_lp(const GridFunction& f, double p);
double weak_lp(const std::vector<double>& v, double p);

}  // namespace vlab

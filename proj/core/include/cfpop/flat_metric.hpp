#pragma once

#include "cfpop/measure.hpp"

namespace cfpop {

// Exact bounded-Lipschitz (flat) distance between two atomic measures:
//   sup { sum_i phi_i d_i :  |phi_i| <= 1,  |phi_{i+1} - phi_i| <= s_{i+1} - s_i }
// over the merged site list s_1 < ... < s_n, where d_i is the signed weight
// difference at s_i. Computed by a forward sweep over sites maintaining the
// concave piecewise-linear value function of the partial problem.
double flat_distance(const AtomicMeasure& a, const AtomicMeasure& b);

}  // namespace cfpop

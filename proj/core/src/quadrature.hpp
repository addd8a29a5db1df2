#pragma once

#include <functional>

namespace cfpop {

// Composite Simpson rule with n subintervals (n rounded up to even).
template <class F>
double simpson(F&& f, double lo, double hi, int n = 16) {
  if (!(hi > lo)) return 0.0;
  if (n % 2) ++n;
  double h = (hi - lo) / n;
  double s = f(lo) + f(hi);
  for (int k = 1; k < n; ++k) s += (k % 2 ? 4.0 : 2.0) * f(lo + k * h);
  return s * h / 3.0;
}

}  // namespace cfpop

#pragma once

#include <functional>
#include <span>
#include <vector>

#include "cfpop/grid.hpp"
#include "cfpop/measure.hpp"

namespace cfpop {

// Rate evaluated at all grid sites; may depend on time and the current state.
using RateFn = std::function<void(double t, const GridMeasure& mu, std::span<double> out)>;

// Wrap an autonomous rate function of size x.
inline RateFn rate_of_x(std::function<double(double)> f) {
  return [f = std::move(f)](double, const GridMeasure& mu, std::span<double> out) {
    for (int j = 0; j <= mu.grid.J; ++j) out[j] = f(mu.grid.site(j));
  };
}

inline RateFn rate_const(double c) {
  return [c](double, const GridMeasure& mu, std::span<double> out) {
    for (int j = 0; j <= mu.grid.J; ++j) out[j] = c;
  };
}

// Daughter distribution of a splitting parent: point masses at fixed sites
// with parent-dependent weights, plus a continuous density supported in
// [0, parent]. A closed-form cell integral of the density may be supplied to
// bypass quadrature.
struct DaughterAtom {
  double site;
  std::function<double(double)> weight;  // weight as a function of parent size
};

struct DaughterKernel {
  std::function<double(double, double)> density;                 // density(parent, x)
  std::function<double(double, double, double)> cell_integral;   // (parent, lo, hi)
  std::vector<DaughterAtom> atoms;
  bool empty() const { return !density && !cell_integral && atoms.empty(); }
};

// Stability constants. zeta bounds g, d and the birth rate in W^{1,inf};
// C_kappa bounds the coagulation kernel; C_a = sup a; C_b bounds the daughter
// count per split; zeta_bar = max(zeta, |a|_{W^{1,inf}}).
struct ProblemConstants {
  double zeta = 0.0;
  double C_kappa = 0.0;
  double C_a = 0.0;
  double C_b = 0.0;
  double zeta_bar = 0.0;
  bool estimated = false;
};

struct ProblemSpec {
  double x_max = 0.0;
  RateFn growth, death, birth;                 // null means identically zero
  std::function<double(double, double)> coag;  // symmetric kernel; null means none
  std::function<double(double)> frag_rate;     // null means none
  DaughterKernel daughter;
  ProblemConstants constants;
  bool constants_supplied = false;
};

// Grid maxima of sampled values and finite-difference slopes, scaled by a
// 1.1 safety factor.
ProblemConstants estimate_constants(const ProblemSpec& spec, const GridSpec& grid);

// Sampled sanity checks: kernel symmetry and sign, nonnegative rates, growth
// positive at 0 and vanishing at x_max, daughters within [0, parent].
void validate_problem(const ProblemSpec& spec, const GridSpec& grid);

}  // namespace cfpop

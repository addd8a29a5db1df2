#include "cfpop/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cfpop {

double minmod(double p, double q, Limiter mode) {
  double sp = (p > 0.0) - (p < 0.0);
  double sq = (q > 0.0) - (q < 0.0);
  double mag = mode == Limiter::literal ? std::max(std::abs(p), std::abs(q))
                                        : std::min(std::abs(p), std::abs(q));
  return 0.5 * (sp + sq) * mag;
}

void compute_fluxes(std::span<const double> g, std::span<const double> m, Limiter limiter,
                    std::span<double> f) {
  const int J = static_cast<int>(m.size()) - 1;
  for (int j = 0; j <= J; ++j) {
    double upwind = g[j] * m[j];
    if (limiter == Limiter::off || j <= 1 || j >= J - 1) {
      f[j] = upwind;
      continue;
    }
    double dp = m[j + 1] - m[j];
    double dm = m[j] - m[j - 1];
    f[j] = upwind + 0.5 * (g[j + 1] - g[j]) * m[j] + 0.5 * g[j] * minmod(dp, dm, limiter);
  }
}

double renewal_sum(std::span<const double> beta, std::span<const double> m) {
  const int J = static_cast<int>(m.size()) - 1;
  double s = 1.5 * beta[1] * m[1];
  for (int j = 2; j <= J - 1; ++j) s += beta[j] * m[j];
  s += 0.5 * beta[J] * m[J];
  return s;
}

double boundary_mass(double g0, std::span<const double> beta, std::span<const double> m,
                     double dx, bool growth_active) {
  if (!growth_active) return 0.0;
  double s = renewal_sum(beta, m);
  if (s == 0.0) return 0.0;
  if (!(g0 > 0.0))
    throw std::runtime_error("boundary_mass: positive birth integral with nonpositive growth at 0");
  return dx * s / g0;
}

void frag_term(const DiscreteKernels& kern, std::span<const double> m, std::span<double> F) {
  const int J = static_cast<int>(m.size()) - 1;
  std::fill(F.begin(), F.end(), 0.0);
  if (!kern.has_frag()) return;
  const auto& a = kern.frag_rate;
  if (!kern.daughter.empty()) {
    for (int i = 0; i <= J; ++i) {
      double parent = a[i] * m[i];
      if (parent == 0.0) continue;
      const auto& row = kern.daughter[i];
      for (int j = 0; j <= i; ++j) F[j] += row[j] * parent;
    }
  }
  for (int j = 0; j <= J; ++j) F[j] -= a[j] * m[j];
}

void coag_explicit(const DiscreteKernels& kern, std::span<const double> m, std::span<double> C) {
  const int J = static_cast<int>(m.size()) - 1;
  std::fill(C.begin(), C.end(), 0.0);
  if (!kern.has_coag()) return;
  for (int j = 2; j <= J; ++j) {
    double gain = 0.0;
    for (int i = 1; i <= j - 1; ++i) gain += kern.kappa(i, j - i) * m[i] * m[j - i];
    C[j] = 0.5 * gain;
  }
  for (int j = 0; j <= J; ++j) {
    double loss = 0.0;
    for (int i = 1; i <= J; ++i) loss += kern.kappa(i, j) * m[i];
    C[j] -= m[j] * loss;
  }
}

}  // namespace cfpop

#pragma once

#include <span>

#include "cfpop/config.hpp"
#include "cfpop/kernels.hpp"

namespace cfpop {

// Slope limiter: zero when the arguments disagree in sign, otherwise the
// smaller magnitude (standard) or the larger (literal).
double minmod(double p, double q, Limiter mode);

// Transport fluxes f[j] through the right edge of cell j. Cells 0, 1, J-1
// and J use first-order upwind g_j m_j; interior cells add the variable-
// coefficient correction and the limited slope. With limiter off every cell
// is upwind.
void compute_fluxes(std::span<const double> g, std::span<const double> m, Limiter limiter,
                    std::span<double> f);

// Weighted quadrature of the birth integral: (3/2) b_1 m_1 + sum_{j=2}^{J-1}
// b_j m_j + (1/2) b_J m_J. Units are mass per unit time (inflow through x=0).
double renewal_sum(std::span<const double> beta, std::span<const double> m);

// Boundary-cell closure m_0 = (dx/g0) * renewal_sum. With growth inactive
// the convention is m_0 = 0; a positive birth integral without growth is an
// error (newborns have nowhere to enter).
double boundary_mass(double g0, std::span<const double> beta, std::span<const double> m,
                     double dx, bool growth_active = true);

// Fragmentation source F_j = sum_{i>=j} b_{ij} a_i m_i - a_j m_j for all
// cells, parents iterated in ascending order.
void frag_term(const DiscreteKernels& kern, std::span<const double> m, std::span<double> F);

// Explicit coagulation source: pair gains (1/2) sum_{i=1}^{j-1} k_{i,j-i}
// m_i m_{j-i} minus losses m_j sum_{i>=1} k_{ij} m_i. Cell 0 never pairs; it
// only loses mass to partners at rate k_{0i}.
void coag_explicit(const DiscreteKernels& kern, std::span<const double> m, std::span<double> C);

}  // namespace cfpop

#pragma once

#include <functional>
#include <vector>

#include "cfpop/config.hpp"
#include "cfpop/grid.hpp"
#include "cfpop/problem.hpp"

namespace cfpop {

// Cell-averaged model coefficients on a fixed grid.
struct DiscreteKernels {
  int J = 0;
  std::vector<double> frag_rate;              // a_i; empty when fragmentation is off
  std::vector<double> coag;                   // (J+1)^2 row-major; empty when coagulation is off
  std::vector<std::vector<double>> daughter;  // row i: daughter mass in cells 0..i per split of parent i
  bool truncated = false;

  bool has_coag() const { return !coag.empty(); }
  bool has_frag() const { return !frag_rate.empty(); }
  double kappa(int i, int j) const { return coag[static_cast<size_t>(i) * (J + 1) + j]; }
};

// Cell average of the fragmentation rate; the half cell uses the factor
// 2/dx. Quadrature matches project_initial (composite Simpson, 16
// subintervals).
std::vector<double> discretize_frag_rate(const std::function<double(double)>& a,
                                         const GridSpec& grid);

// Tensor-product cell average of the coagulation kernel. With truncate on,
// entries with i + j > J are zeroed so that merged mass never leaves the
// grid.
std::vector<double> discretize_coag_kernel(const std::function<double(double, double)>& kappa,
                                           const GridSpec& grid, bool truncate);

// Row i holds the expected daughter count per split of parent x_i landing in
// each cell j <= i: the continuous density integrated over the cell clipped
// to [0, x_i], plus atom weights for atoms inside the cell.
std::vector<std::vector<double>> discretize_daughter(const DaughterKernel& b,
                                                     const GridSpec& grid);

DiscreteKernels discretize_kernels(const ProblemSpec& spec, const GridSpec& grid,
                                   bool truncate_coag = false);

// Largest dt admitted by the stability bound for the given variant; returns
// cap when every constant vanishes.
double cfl_max_dt(const ProblemConstants& c, const GridSpec& grid, Variant variant,
                  double T, double tv0, double cap);

}  // namespace cfpop

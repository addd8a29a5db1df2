#pragma once

#include <functional>

#include "cfpop/measure.hpp"

namespace cfpop {

// Initial data: an absolutely continuous part plus point masses. When the
// cell integral of the density has a closed form the caller can supply it;
// otherwise the density is integrated by composite Simpson quadrature with
// 16 subintervals per cell.
struct InitialData {
  std::function<double(double)> density;                // may be empty
  std::function<double(double, double)> cell_integral;  // integral over [lo, hi); optional
  AtomicMeasure atoms;                                  // nonnegative weights
};

// m_j = integral of the density over cell j + weights of atoms landing in
// cell j.
GridMeasure project_initial(const InitialData& data, const GridSpec& grid);

}  // namespace cfpop

#include "cfpop/projection.hpp"

#include <stdexcept>

#include "quadrature.hpp"

namespace cfpop {

GridMeasure project_initial(const InitialData& data, const GridSpec& grid) {
  GridMeasure mu = GridMeasure::zero(grid);

  if (data.cell_integral) {
    for (int j = 0; j <= grid.J; ++j)
      mu.m[j] = data.cell_integral(grid.cell_lo(j), grid.cell_hi(j));
  } else if (data.density) {
    auto f = [&](double x) {
      double v = data.density(x);
      if (v < 0.0) throw std::invalid_argument("project_initial: negative density sample");
      return v;
    };
    for (int j = 0; j <= grid.J; ++j)
      mu.m[j] = simpson(f, grid.cell_lo(j), grid.cell_hi(j));
  }

  for (size_t i = 0; i < data.atoms.site.size(); ++i) {
    double pos = data.atoms.site[i];
    double w = data.atoms.weight[i];
    if (w < 0.0) throw std::invalid_argument("project_initial: negative atom weight");
    if (!(pos >= 0.0) || pos >= grid.domain_hi())
      throw std::invalid_argument("project_initial: atom outside [0, x_max + dx/2)");
    mu.m[grid.cell_of(pos)] += w;
  }
  return mu;
}

}  // namespace cfpop

#pragma once

#include <stdexcept>

namespace cfpop {

// Uniform size grid on [0, x_max] with a half-width boundary cell.
// Cell 0 is [0, dx/2) with site dx/4; cell j >= 1 is [(j-1/2)dx, (j+1/2)dx)
// with site j*dx. The last cell overhangs x_max by dx/2, so the cells
// partition [0, x_max + dx/2).
struct GridSpec {
  double x_max = 0.0;
  int J = 0;  // highest cell index; cells are 0..J
  double dx = 0.0;

  static GridSpec make(double x_max, int J) {
    if (!(x_max > 0.0)) throw std::invalid_argument("grid: x_max must be positive");
    if (J < 2) throw std::invalid_argument("grid: need at least 2 cells");
    return GridSpec{x_max, J, x_max / J};
  }

  double site(int j) const { return j == 0 ? 0.25 * dx : j * dx; }
  double cell_lo(int j) const { return j == 0 ? 0.0 : (j - 0.5) * dx; }
  double cell_hi(int j) const { return (j + 0.5) * dx; }
  double domain_hi() const { return x_max + 0.5 * dx; }

  // Index of the cell containing x; cells are half-open on the right.
  int cell_of(double x) const {
    if (!(x >= 0.0) || x >= domain_hi())
      throw std::invalid_argument("grid: position outside [0, x_max + dx/2)");
    if (x < 0.5 * dx) return 0;
    int j = static_cast<int>(x / dx + 0.5);
    return j > J ? J : j;
  }

  bool operator==(const GridSpec&) const = default;
};

}  // namespace cfpop

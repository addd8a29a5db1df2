#include "cfpop/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "quadrature.hpp"

namespace cfpop {

std::vector<double> discretize_frag_rate(const std::function<double(double)>& a,
                                         const GridSpec& grid) {
  std::vector<double> out(static_cast<size_t>(grid.J) + 1);
  for (int j = 0; j <= grid.J; ++j) {
    double lo = grid.cell_lo(j), hi = grid.cell_hi(j);
    double avg = simpson(a, lo, hi) / (hi - lo);
    if (avg < 0.0) throw std::invalid_argument("discretize: negative fragmentation rate average");
    out[j] = avg;
  }
  return out;
}

std::vector<double> discretize_coag_kernel(const std::function<double(double, double)>& kappa,
                                           const GridSpec& grid, bool truncate) {
  const int J = grid.J;
  const size_t n = static_cast<size_t>(J) + 1;
  std::vector<double> k(n * n);

  // Tensor-product composite Simpson, 4 subintervals per axis: exact for
  // kernels cubic in each variable, which covers the affine cases.
  constexpr int nsub = 4;
  double nodes[nsub + 1], wts[nsub + 1];
  for (int i = 0; i <= J; ++i) {
    double lo_i = grid.cell_lo(i), hi_i = grid.cell_hi(i);
    double hx = (hi_i - lo_i) / nsub;
    for (int q = 0; q <= nsub; ++q) {
      nodes[q] = lo_i + q * hx;
      wts[q] = (q == 0 || q == nsub) ? hx / 3.0 : (q % 2 ? 4.0 * hx / 3.0 : 2.0 * hx / 3.0);
    }
    for (int j = 0; j <= J; ++j) {
      double lo_j = grid.cell_lo(j), hi_j = grid.cell_hi(j);
      double hy = (hi_j - lo_j) / nsub;
      double sum = 0.0;
      for (int q = 0; q <= nsub; ++q) {
        double wy = (q == 0 || q == nsub) ? hy / 3.0 : (q % 2 ? 4.0 * hy / 3.0 : 2.0 * hy / 3.0);
        double y = lo_j + q * hy;
        double row = 0.0;
        for (int p = 0; p <= nsub; ++p) row += wts[p] * kappa(nodes[p], y);
        sum += wy * row;
      }
      k[static_cast<size_t>(i) * n + j] = sum / ((hi_i - lo_i) * (hi_j - lo_j));
    }
  }

  for (int i = 0; i <= J; ++i) {
    for (int j = i; j <= J; ++j) {
      double kij = k[static_cast<size_t>(i) * n + j];
      double kji = k[static_cast<size_t>(j) * n + i];
      if (kij < 0.0) throw std::invalid_argument("discretize: negative coagulation average");
      if (std::abs(kij - kji) > 1e-12 * std::max(1.0, std::abs(kij)))
        throw std::invalid_argument("discretize: coagulation kernel not symmetric");
      double avg = 0.5 * (kij + kji);
      k[static_cast<size_t>(i) * n + j] = avg;
      k[static_cast<size_t>(j) * n + i] = avg;
    }
  }

  if (truncate) {
    for (int i = 0; i <= J; ++i)
      for (int j = 0; j <= J; ++j)
        if (i + j > J) k[static_cast<size_t>(i) * n + j] = 0.0;
  }
  return k;
}

std::vector<std::vector<double>> discretize_daughter(const DaughterKernel& b,
                                                     const GridSpec& grid) {
  const int J = grid.J;
  std::vector<std::vector<double>> rows(static_cast<size_t>(J) + 1);
  for (int i = 0; i <= J; ++i) {
    double parent = grid.site(i);
    std::vector<double>& row = rows[i];
    row.assign(static_cast<size_t>(i) + 1, 0.0);

    if (b.cell_integral || b.density) {
      for (int j = 0; j <= i; ++j) {
        double lo = grid.cell_lo(j);
        double hi = std::min(grid.cell_hi(j), parent);
        if (hi <= lo) continue;
        double v = b.cell_integral
                       ? b.cell_integral(parent, lo, hi)
                       : simpson([&](double x) { return b.density(parent, x); }, lo, hi);
        if (v < 0.0) throw std::invalid_argument("discretize: negative daughter mass in cell");
        row[j] += v;
      }
    }
    for (const auto& atom : b.atoms) {
      if (atom.site > parent || atom.site >= grid.domain_hi()) continue;
      double w = atom.weight(parent);
      if (w < 0.0) throw std::invalid_argument("discretize: negative daughter atom weight");
      row[grid.cell_of(atom.site)] += w;
    }
  }
  return rows;
}

DiscreteKernels discretize_kernels(const ProblemSpec& spec, const GridSpec& grid,
                                   bool truncate_coag) {
  DiscreteKernels k;
  k.J = grid.J;
  if (spec.frag_rate) k.frag_rate = discretize_frag_rate(spec.frag_rate, grid);
  if (spec.coag) {
    k.coag = discretize_coag_kernel(spec.coag, grid, truncate_coag);
    k.truncated = truncate_coag;
  }
  if (!spec.daughter.empty()) k.daughter = discretize_daughter(spec.daughter, grid);
  return k;
}

double cfl_max_dt(const ProblemConstants& c, const GridSpec& grid, Variant variant,
                  double T, double tv0, double cap) {
  double denom;
  if (variant == Variant::explicit_scheme) {
    denom = c.C_kappa * tv0 * std::exp((c.zeta + c.C_b * c.C_a) * T) +
            c.C_a * std::max(1.0, c.C_b) + (1.0 + 1.5 / grid.dx) * c.zeta;
  } else {
    denom = c.zeta_bar * (2.0 + 1.5 / grid.dx);
  }
  return denom > 0.0 ? 1.0 / denom : cap;
}

}  // namespace cfpop

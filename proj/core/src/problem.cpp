#include "cfpop/problem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cfpop/kernels.hpp"

namespace cfpop {

namespace {

// max(sup |v|, sup |slope|) from samples at the grid sites.
double wnorm_samples(const std::vector<double>& v, const GridSpec& grid) {
  double n = 0.0;
  for (int j = 0; j <= grid.J; ++j) n = std::max(n, std::abs(v[j]));
  for (int j = 0; j < grid.J; ++j) {
    double gap = grid.site(j + 1) - grid.site(j);
    n = std::max(n, std::abs(v[j + 1] - v[j]) / gap);
  }
  return n;
}

std::vector<double> sample_rate(const RateFn& rate, const GridSpec& grid) {
  std::vector<double> v(static_cast<size_t>(grid.J) + 1, 0.0);
  if (rate) {
    GridMeasure zero = GridMeasure::zero(grid);
    rate(0.0, zero, v);
  }
  return v;
}

}  // namespace

ProblemConstants estimate_constants(const ProblemSpec& spec, const GridSpec& grid) {
  constexpr double safety = 1.1;
  ProblemConstants c;
  c.estimated = true;

  double wg = wnorm_samples(sample_rate(spec.growth, grid), grid);
  double wd = wnorm_samples(sample_rate(spec.death, grid), grid);
  double wb = wnorm_samples(sample_rate(spec.birth, grid), grid);
  c.zeta = safety * std::max({wg, wd, wb});

  if (spec.coag) {
    double m = 0.0;
    for (int i = 0; i <= grid.J; ++i)
      for (int j = i; j <= grid.J; ++j)
        m = std::max(m, std::abs(spec.coag(grid.site(i), grid.site(j))));
    c.C_kappa = safety * m;
  }

  double wa = 0.0;
  if (spec.frag_rate) {
    std::vector<double> a(static_cast<size_t>(grid.J) + 1);
    for (int j = 0; j <= grid.J; ++j) a[j] = spec.frag_rate(grid.site(j));
    double sup = 0.0;
    for (double v : a) sup = std::max(sup, std::abs(v));
    c.C_a = safety * sup;
    wa = safety * wnorm_samples(a, grid);
  }

  if (!spec.daughter.empty()) {
    auto rows = discretize_daughter(spec.daughter, grid);
    double m = 0.0;
    for (const auto& row : rows) {
      double s = 0.0;
      for (double v : row) s += v;
      m = std::max(m, s);
    }
    c.C_b = safety * m;
  }

  c.zeta_bar = std::max(c.zeta, wa);
  return c;
}

void validate_problem(const ProblemSpec& spec, const GridSpec& grid) {
  int stride = std::max(1, grid.J / 32);

  if (spec.coag) {
    for (int i = 0; i <= grid.J; i += stride) {
      for (int j = i; j <= grid.J; j += stride) {
        double xi = grid.site(i), xj = grid.site(j);
        double kij = spec.coag(xi, xj), kji = spec.coag(xj, xi);
        if (kij < 0.0)
          throw std::invalid_argument("problem: coagulation kernel negative at sample");
        if (std::abs(kij - kji) > 1e-12 * std::max(1.0, std::abs(kij)))
          throw std::invalid_argument("problem: coagulation kernel not symmetric");
      }
    }
  }

  if (spec.frag_rate) {
    for (int j = 0; j <= grid.J; j += stride)
      if (spec.frag_rate(grid.site(j)) < 0.0)
        throw std::invalid_argument("problem: fragmentation rate negative at sample");
  }

  if (spec.birth && !spec.growth)
    throw std::invalid_argument("problem: birth rate requires a growth rate (renewal enters at x = 0)");

  if (spec.growth) {
    auto g = sample_rate(spec.growth, grid);
    double sup = wnorm_samples(g, grid);
    if (!(g[0] > 0.0))
      throw std::invalid_argument("problem: growth must be positive at the boundary cell");
    if (std::abs(g[grid.J]) > 1e-8 * (1.0 + sup))
      throw std::invalid_argument("problem: growth must vanish at x_max");
  }

  if (spec.daughter.density) {
    for (int i = 1; i <= grid.J; i += stride) {
      double parent = grid.site(i);
      for (int j = 0; j <= i; j += stride) {
        double x = std::min(grid.site(j), parent);
        if (spec.daughter.density(parent, x) < -1e-12)
          throw std::invalid_argument("problem: daughter density negative at sample");
      }
      if (std::abs(spec.daughter.density(parent, parent * 1.0625 + 1.0)) > 1e-12)
        throw std::invalid_argument("problem: daughter density must vanish beyond the parent size");
    }
  }
  for (const auto& atom : spec.daughter.atoms) {
    if (!(atom.site >= 0.0))
      throw std::invalid_argument("problem: daughter atom site must be nonnegative");
    for (int i = 1; i <= grid.J; i += stride) {
      double parent = grid.site(i);
      if (atom.site <= parent && atom.weight(parent) < 0.0)
        throw std::invalid_argument("problem: daughter atom weight negative at sample");
    }
  }
}

}  // namespace cfpop

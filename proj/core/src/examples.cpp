#include "cfpop/examples.hpp"

#include <cmath>
#include <stdexcept>

namespace cfpop {
namespace {

// Cell integral of c^2 e^{-c x} over [lo, hi).
double exp_cell(double c, double lo, double hi) {
  return c * (std::exp(-c * lo) - std::exp(-c * hi));
}

std::vector<std::pair<int, int>> doubling_levels(int nx, int nt, int count) {
  std::vector<std::pair<int, int>> out;
  for (int k = 0; k < count; ++k) {
    out.emplace_back(nx << k, nt << k);
  }
  return out;
}

}  // namespace

ExampleDef example1() {
  ExampleDef ex;
  ex.name = "1";
  ex.title = "pure coagulation, constant kernel";
  ex.report = "error table against the exact solution";
  ex.x_max = 20.0;
  ex.T = 0.5;
  ex.problem.x_max = ex.x_max;
  ex.problem.coag = [](double, double) { return 1.0; };
  ex.problem.constants = {0.0, 1.0, 0.0, 0.0, 0.0, false};
  ex.problem.constants_supplied = true;
  ex.initial.density = [](double x) { return std::exp(-x); };
  ex.initial.cell_integral = [](double lo, double hi) {
    return std::exp(-lo) - std::exp(-hi);
  };
  ex.exact_cell = [](double t, double lo, double hi) {
    return exp_cell(2.0 / (2.0 + t), lo, hi);
  };
  ex.exact_density = [](double t, double x) {
    const double c = 2.0 / (2.0 + t);
    return c * c * std::exp(-c * x);
  };
  ex.levels = doubling_levels(100, 250, 4);
  ex.default_nx = 100;
  ex.default_nt = 250;
  return ex;
}

ExampleDef example2() {
  ExampleDef ex;
  ex.name = "2";
  ex.title = "pure fragmentation, uniform daughters";
  ex.report = "error table against the exact solution";
  ex.x_max = 20.0;
  ex.T = 0.5;
  ex.problem.x_max = ex.x_max;
  ex.problem.frag_rate = [](double x) { return x; };
  ex.problem.daughter.density = [](double parent, double x) {
    return (x <= parent) ? 2.0 / parent : 0.0;
  };
  ex.problem.daughter.cell_integral = [](double parent, double lo, double hi) {
    const double w = std::min(hi, parent) - lo;
    return w > 0.0 ? 2.0 * w / parent : 0.0;
  };
  ex.problem.constants = {0.0, 0.0, 20.0, 2.0, 20.0, false};
  ex.problem.constants_supplied = true;
  ex.initial.density = [](double x) { return std::exp(-x); };
  ex.initial.cell_integral = [](double lo, double hi) {
    return std::exp(-lo) - std::exp(-hi);
  };
  ex.exact_cell = [](double t, double lo, double hi) {
    return exp_cell(1.0 + t, lo, hi);
  };
  ex.exact_density = [](double t, double x) {
    const double c = 1.0 + t;
    return c * c * std::exp(-c * x);
  };
  ex.levels = doubling_levels(100, 250, 4);
  ex.default_nx = 100;
  ex.default_nt = 250;
  return ex;
}

ExampleDef example3() {
  ExampleDef ex;
  ex.name = "3";
  ex.title = "full model: growth, renewal, death, coagulation, fragmentation";
  ex.report = "self-convergence error table";
  ex.x_max = 20.0;
  ex.T = 0.5;
  ex.problem.x_max = ex.x_max;
  ex.problem.growth = rate_of_x([](double x) {
    return 2.0 - 2.0 * std::exp(x - 20.0);
  });
  ex.problem.death = rate_const(1.0);
  ex.problem.birth = rate_const(2.0);
  ex.problem.coag = [](double, double) { return 1.0; };
  ex.problem.frag_rate = [](double x) { return x; };
  ex.problem.daughter.density = [](double parent, double x) {
    return (x <= parent) ? 2.0 / parent : 0.0;
  };
  ex.problem.daughter.cell_integral = [](double parent, double lo, double hi) {
    const double w = std::min(hi, parent) - lo;
    return w > 0.0 ? 2.0 * w / parent : 0.0;
  };
  ex.problem.constants = {2.0, 1.0, 20.0, 2.0, 20.0, false};
  ex.problem.constants_supplied = true;
  ex.initial.density = [](double x) { return std::exp(-x); };
  ex.initial.cell_integral = [](double lo, double hi) {
    return std::exp(-lo) - std::exp(-hi);
  };
  ex.self_convergence = true;
  ex.levels = doubling_levels(100, 250, 5);
  ex.default_nx = 100;
  ex.default_nt = 250;
  return ex;
}

ExampleDef example4() {
  ExampleDef ex;
  ex.name = "4";
  ex.title = "mixed fragmentation with atomic daughters";
  ex.report = "final-state structure (atoms persist on the grid)";
  ex.x_max = 20.0;
  ex.T = 4.0;
  ex.problem.x_max = ex.x_max;
  // 1/x blows up at the origin; the half-cell average is patched per grid.
  ex.problem.frag_rate = [](double x) { return x > 0.0 ? 1.0 / x : 0.0; };
  ex.frag_halfcell = [](double dx) { return std::log(50.0) / (0.5 * dx); };
  ex.problem.daughter.density = [](double parent, double x) {
    return (x >= 5.0 && x <= parent) ? 2.0 / parent : 0.0;
  };
  ex.problem.daughter.cell_integral = [](double parent, double lo, double hi) {
    const double w = std::min(hi, parent) - std::max(lo, 5.0);
    return w > 0.0 ? 2.0 * w / parent : 0.0;
  };
  for (int s = 1; s <= 5; ++s) {
    ex.problem.daughter.atoms.push_back(
        {static_cast<double>(s), [](double parent) { return 2.0 / parent; }});
  }
  ex.problem.constants_supplied = false;
  ex.initial.cell_integral = [](double lo, double hi) {
    const double w = std::min(hi, 15.0) - std::max(lo, 5.0);
    return w > 0.0 ? w : 0.0;
  };
  for (int s = 1; s <= 5; ++s) {
    ex.initial.atoms.site.push_back(static_cast<double>(s));
    ex.initial.atoms.weight.push_back(1.0);
  }
  ex.levels = {{200, 800}};
  ex.default_nx = 200;
  ex.default_nt = 800;
  return ex;
}

std::vector<ExampleDef> all_examples() {
  std::vector<ExampleDef> out;
  out.push_back(example1());
  out.push_back(example2());
  out.push_back(example3());
  out.push_back(example4());
  return out;
}

ExampleDef find_example(const std::string& name) {
  for (auto& ex : all_examples()) {
    if (ex.name == name) return ex;
  }
  throw std::invalid_argument("unknown example '" + name +
                              "'; valid names are 1, 2, 3, 4");
}

}  // namespace cfpop

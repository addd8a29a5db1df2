#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cfpop/problem.hpp"
#include "cfpop/projection.hpp"

namespace cfpop {

// A built-in model instance: problem ingredients, initial data, the exact
// solution when one is known, and the default refinement levels of its
// convergence study.
struct ExampleDef {
  std::string name;    // "1".."4"
  std::string title;
  std::string report;  // what the built-in study produces
  double x_max = 20.0;
  double T = 0.5;
  ProblemSpec problem;
  InitialData initial;
  // Closed-form cell integral of the exact solution at time t, when known.
  std::function<double(double t, double lo, double hi)> exact_cell;
  std::function<double(double t, double x)> exact_density;
  bool self_convergence = false;
  std::vector<std::pair<int, int>> levels;  // (Nx, Nt), doubling
  int default_nx = 100;
  int default_nt = 250;
  // Per-grid override of the half-cell fragmentation average, for rates
  // whose cell-0 average needs special handling.
  std::function<double(double dx)> frag_halfcell;

  bool has_exact() const { return static_cast<bool>(exact_cell); }
};

// Pure coagulation with constant kernel; exact solution known.
ExampleDef example1();
// Pure binary fragmentation with uniform daughters; exact solution known.
ExampleDef example2();
// Full model (growth, death, birth, coagulation, fragmentation); studied by
// self-convergence.
ExampleDef example3();
// Mixed discrete/continuous fragmentation; atoms must persist.
ExampleDef example4();

std::vector<ExampleDef> all_examples();
ExampleDef find_example(const std::string& name);

}  // namespace cfpop

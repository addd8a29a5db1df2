#pragma once

#include <string>

#include "cfpop/problem.hpp"
#include "cfpop/projection.hpp"

namespace cfpop {

// A model read from a JSON problem file. Rate coefficients are expressions
// in x and t, the coagulation kernel in x and y, the fragmentation rate in
// x, the daughter density in x (daughter size) and y (parent size), atom
// weights in y, and the initial density in x.
struct LoadedProblem {
  std::string name;
  double x_max = 0.0;
  double T = 0.0;
  ProblemSpec problem;
  InitialData initial;
};

LoadedProblem load_problem_file(const std::string& path);

}  // namespace cfpop

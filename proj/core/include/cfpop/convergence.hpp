#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "cfpop/config.hpp"
#include "cfpop/examples.hpp"
#include "cfpop/measure.hpp"

namespace cfpop {

struct ConvergenceRow {
  int nx = 0;
  int nt = 0;
  double error = 0.0;
  bool has_order = false;  // first row and degenerate errors carry no order
  double order = 0.0;
};

struct ConvergenceOptions {
  Variant variant = Variant::explicit_scheme;
  int time_order = 2;
  Limiter limiter = Limiter::standard;
  CflPolicy cfl_policy = CflPolicy::warn;
};

// Coarsen a solution from a grid with even cell count to the grid with half
// the resolution: even-index masses stay in place and odd-index masses split
// evenly between the two enclosing coarse cells. Mass is conserved exactly.
GridMeasure restrict_to_coarser(const GridMeasure& fine);

// Run the example at each level and measure the flat-distance error of the
// final state: against the projected exact solution when one is known,
// otherwise against the restricted next-finer solution (the row at Nx
// compares against Nx/2, so one extra run at half the base resolution is
// made first). Levels must double both Nx and Nt.
std::vector<ConvergenceRow> run_convergence(const ExampleDef& ex,
                                            const std::vector<std::pair<int, int>>& levels,
                                            const ConvergenceOptions& opt = {});

// CSV with header "Nx,Nt,error,order"; errors in scientific notation with
// five significant digits, orders with four decimals, first-row order empty.
void emit_table_csv(const std::vector<ConvergenceRow>& rows, std::ostream& out);
void emit_table_json(const std::vector<ConvergenceRow>& rows, std::ostream& out);
std::vector<ConvergenceRow> parse_table_csv(std::istream& in);

}  // namespace cfpop

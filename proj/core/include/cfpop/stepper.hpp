#pragma once

#include <vector>

#include "cfpop/config.hpp"
#include "cfpop/kernels.hpp"
#include "cfpop/measure.hpp"
#include "cfpop/problem.hpp"

namespace cfpop {

// Scratch arrays shared by the one-step maps; reused across steps by solve.
struct StepWorkspace {
  std::vector<double> g, d, beta, f, F, C, gain, loss;
  void resize(int J);
};

struct StepDiagnostics {
  double min_mass = 0.0;          // smallest mass seen in the produced state
  long long negative_events = 0;  // masses below -1e-12 * TV of the state
};

// One-step maps; t is the time at the start of the step. Each returns the
// full next state including the boundary cell. The boundary cell is an
// evolving half cell: it collects the birth inflow, loses mass through its
// right edge by a reconstruction anchored at the boundary density, and
// carries its own death, fragmentation and coagulation-loss dynamics. When
// the step budget exceeds the half cell's own stability limit the cell is
// advanced by frozen-coefficient substeps and the edge flux handed to cell 1
// is the substep average, keeping the bookkeeping conservative.
GridMeasure step_explicit(const GridMeasure& mu, double t, const ProblemSpec& spec,
                          const DiscreteKernels& kern, double dt,
                          Limiter limiter = Limiter::standard, StepWorkspace* ws = nullptr);

// Transport, death and fragmentation as in step_explicit; coagulation gains
// use already-updated masses below the target cell and losses act on the new
// mass, so the update is a lower-triangular solve done in one ascending
// sweep.
GridMeasure step_semi_implicit(const GridMeasure& mu, double t, const ProblemSpec& spec,
                               const DiscreteKernels& kern, double dt,
                               Limiter limiter = Limiter::standard, StepWorkspace* ws = nullptr);

// Heun lift of the explicit map: average of the state and the twice-stepped
// stage.
GridMeasure step_rk2(const GridMeasure& mu, double t, const ProblemSpec& spec,
                     const DiscreteKernels& kern, double dt,
                     Limiter limiter = Limiter::standard, StepWorkspace* ws = nullptr);

// Per-step Richardson lift of the semi-implicit map: two half steps
// extrapolated against one full step. The combination may undershoot zero at
// round-off scale; undershoots are recorded, never clipped.
GridMeasure step_richardson(const GridMeasure& mu, double t, const ProblemSpec& spec,
                            const DiscreteKernels& kern, double dt,
                            Limiter limiter = Limiter::standard, StepWorkspace* ws = nullptr,
                            StepDiagnostics* diag = nullptr);

struct SolveResult {
  GridSpec grid;
  std::vector<double> times;
  std::vector<GridMeasure> states;  // every step, or only the final state
  double cfl_bound = 0.0;
  bool cfl_satisfied = true;
  double min_mass = 0.0;
  long long negative_events = 0;
  double initial_moment1 = 0.0;
  double final_moment1 = 0.0;
  double wall_ms = 0.0;

  const GridMeasure& final_state() const { return states.back(); }

  // Piecewise-linear interpolation in time between stored states.
  GridMeasure at(double t) const;
};

// March mu0 to T with the per-step map selected by (variant, time_order).
SolveResult solve(const GridMeasure& mu0, const ProblemSpec& spec, const DiscreteKernels& kern,
                  const SchemeConfig& cfg);

}  // namespace cfpop

#include "cfpop/convergence.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "cfpop/flat_metric.hpp"
#include "cfpop/kernels.hpp"
#include "cfpop/projection.hpp"
#include "cfpop/stepper.hpp"

namespace cfpop {

GridMeasure restrict_to_coarser(const GridMeasure& fine) {
  const int Jf = fine.grid.J;
  if (Jf % 2 != 0 || Jf < 4)
    throw std::invalid_argument("restriction needs an even cell count of at least 4");
  const int Jc = Jf / 2;
  GridMeasure out = GridMeasure::zero(GridSpec::make(fine.grid.x_max, Jc));
  const auto& mf = fine.m;
  out.m[0] = mf[0] + 0.5 * mf[1];
  for (int j = 1; j < Jc; ++j) {
    out.m[j] = mf[2 * j] + 0.5 * (mf[2 * j - 1] + mf[2 * j + 1]);
  }
  out.m[Jc] = mf[2 * Jc] + 0.5 * mf[2 * Jc - 1];
  return out;
}

namespace {

GridMeasure run_level(const ExampleDef& ex, int nx, int nt, const ConvergenceOptions& opt) {
  GridSpec grid = GridSpec::make(ex.x_max, nx);
  ProblemSpec spec = ex.problem;
  if (!spec.constants_supplied) spec.constants = estimate_constants(spec, grid);
  DiscreteKernels kern = discretize_kernels(spec, grid);
  if (ex.frag_halfcell && kern.has_frag()) kern.frag_rate[0] = ex.frag_halfcell(grid.dx);
  GridMeasure mu0 = project_initial(ex.initial, grid);
  SchemeConfig cfg;
  cfg.variant = opt.variant;
  cfg.time_order = opt.time_order;
  cfg.limiter = opt.limiter;
  cfg.cfl_policy = opt.cfl_policy;
  cfg.T = ex.T;
  cfg.dt = ex.T / nt;
  cfg.storage = Storage::final_only;
  return solve(mu0, spec, kern, cfg).final_state();
}

}  // namespace

std::vector<ConvergenceRow> run_convergence(const ExampleDef& ex,
                                            const std::vector<std::pair<int, int>>& levels,
                                            const ConvergenceOptions& opt) {
  if (levels.empty()) return {};
  for (size_t k = 1; k < levels.size(); ++k) {
    if (levels[k].first != 2 * levels[k - 1].first ||
        levels[k].second != 2 * levels[k - 1].second)
      throw std::invalid_argument("convergence levels must double both Nx and Nt");
  }
  const bool self = !ex.has_exact();
  if (self && !ex.self_convergence)
    throw std::invalid_argument("example '" + ex.name +
                                "' has no exact solution and no self-convergence study");

  std::vector<double> errs;
  errs.reserve(levels.size());
  if (!self) {
    for (auto [nx, nt] : levels) {
      GridMeasure fin = run_level(ex, nx, nt, opt);
      InitialData exact;
      exact.cell_integral = [&ex](double lo, double hi) { return ex.exact_cell(ex.T, lo, hi); };
      GridMeasure ref = project_initial(exact, fin.grid);
      errs.push_back(flat_distance(to_atomic(fin), to_atomic(ref)));
    }
  } else {
    const int nx0 = levels[0].first, nt0 = levels[0].second;
    if (nx0 % 2 != 0 || nt0 % 2 != 0)
      throw std::invalid_argument("self-convergence base level must have even Nx and Nt");
    GridMeasure prev = run_level(ex, nx0 / 2, nt0 / 2, opt);
    for (auto [nx, nt] : levels) {
      GridMeasure fin = run_level(ex, nx, nt, opt);
      errs.push_back(flat_distance(to_atomic(restrict_to_coarser(fin)), to_atomic(prev)));
      prev = std::move(fin);
    }
  }

  std::vector<ConvergenceRow> rows;
  rows.reserve(levels.size());
  for (size_t k = 0; k < levels.size(); ++k) {
    ConvergenceRow row;
    row.nx = levels[k].first;
    row.nt = levels[k].second;
    row.error = errs[k];
    if (k > 0 && errs[k] > 0.0 && errs[k - 1] > 0.0) {
      row.has_order = true;
      row.order = std::log2(errs[k - 1] / errs[k]);
    }
    rows.push_back(row);
  }
  return rows;
}

void emit_table_csv(const std::vector<ConvergenceRow>& rows, std::ostream& out) {
  out << "Nx,Nt,error,order\n";
  char buf[128];
  for (const auto& r : rows) {
    if (r.has_order) {
      std::snprintf(buf, sizeof buf, "%d,%d,%.4e,%.4f\n", r.nx, r.nt, r.error, r.order);
    } else {
      std::snprintf(buf, sizeof buf, "%d,%d,%.4e,\n", r.nx, r.nt, r.error);
    }
    out << buf;
  }
}

void emit_table_json(const std::vector<ConvergenceRow>& rows, std::ostream& out) {
  out << "[";
  char buf[128];
  for (size_t k = 0; k < rows.size(); ++k) {
    const auto& r = rows[k];
    out << (k ? ",\n  " : "\n  ");
    std::snprintf(buf, sizeof buf, "{\"nx\": %d, \"nt\": %d, \"error\": %.4e, \"order\": ",
                  r.nx, r.nt, r.error);
    out << buf;
    if (r.has_order) {
      std::snprintf(buf, sizeof buf, "%.4f}", r.order);
      out << buf;
    } else {
      out << "null}";
    }
  }
  out << "\n]\n";
}

std::vector<ConvergenceRow> parse_table_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("Nx,Nt,error", 0) != 0)
    throw std::runtime_error("convergence table: bad header");
  std::vector<ConvergenceRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ConvergenceRow r;
    double order = 0.0;
    int n = std::sscanf(line.c_str(), "%d,%d,%lf,%lf", &r.nx, &r.nt, &r.error, &order);
    if (n < 3) throw std::runtime_error("convergence table: bad row '" + line + "'");
    if (n == 4) {
      r.has_order = true;
      r.order = order;
    }
    rows.push_back(r);
  }
  return rows;
}

}  // namespace cfpop

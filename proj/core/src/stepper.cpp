#include "cfpop/stepper.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "cfpop/scheme.hpp"

namespace cfpop {

void StepWorkspace::resize(int J) {
  size_t n = static_cast<size_t>(J) + 1;
  for (auto* v : {&g, &d, &beta, &f, &F, &C, &gain, &loss})
    if (v->size() != n) v->assign(n, 0.0);
}

namespace {

void eval_rate(const RateFn& rate, double t, const GridMeasure& mu, std::vector<double>& out) {
  if (rate)
    rate(t, mu, out);
  else
    std::fill(out.begin(), out.end(), 0.0);
}

// Shared preamble of both variants: sample the rates, form the birth inflow
// S, the transport fluxes and the fragmentation term, then advance the half
// cell. Writes the substep-averaged edge flux into ws.f[0] and the new
// boundary mass into next.m[0].
void prepare_step(const GridMeasure& mu, double t, const ProblemSpec& spec,
                  const DiscreteKernels& kern, double dt, Limiter limiter, StepWorkspace& ws,
                  GridMeasure& next, double& S_out) {
  const int J = mu.grid.J;
  const double dx = mu.grid.dx;
  ws.resize(J);
  eval_rate(spec.growth, t, mu, ws.g);
  eval_rate(spec.death, t, mu, ws.d);
  eval_rate(spec.birth, t, mu, ws.beta);
  const bool growth = static_cast<bool>(spec.growth);

  double S = growth && spec.birth ? renewal_sum(ws.beta, mu.m) : 0.0;
  compute_fluxes(ws.g, mu.m, limiter, ws.f);
  frag_term(kern, mu.m, ws.F);

  double g0 = ws.g[0];
  if (S > 0.0 && !(g0 > 0.0))
    throw std::runtime_error("step: positive birth integral with nonpositive growth at 0");
  // Edge value of the growth rate at dx/2, interpolated from the sites dx/4
  // and dx.
  double ghalf = growth ? (2.0 * ws.g[0] + ws.g[1]) / 3.0 : 0.0;
  double a0 = kern.has_frag() ? kern.frag_rate[0] : 0.0;
  double L0 = 0.0;
  if (kern.has_coag())
    for (int i = 1; i <= J; ++i) L0 += kern.kappa(0, i) * mu.m[i];
  double gain0 = ws.F[0] + a0 * mu.m[0];  // fragmentation deposit into the half cell
  double loss_rate = ws.d[0] + a0 + L0;

  // The half cell's own stability limit is stiffer than the global bound;
  // substep it with frozen inflow and loss coefficients.
  double rate = 4.0 * ghalf / dx + loss_rate;
  int nsub = dt * rate > 0.9 ? static_cast<int>(std::ceil(dt * rate / 0.9)) : 1;
  double h = dt / nsub;
  double m0 = mu.m[0];
  double flux_mass = 0.0;
  for (int s = 0; s < nsub; ++s) {
    // Linear reconstruction on [0, dx/2] anchored at the boundary density
    // S/g(0) with the cell's mean density, evaluated at the outflow edge.
    double edge = growth && g0 > 0.0 ? ghalf * std::max(0.0, 4.0 * m0 / dx - S / g0) : 0.0;
    m0 += h * (S + gain0 - edge - loss_rate * m0);
    flux_mass += h * edge;
  }
  next.m[0] = m0;
  ws.f[0] = flux_mass / dt * dx;
  S_out = S;
}

GridMeasure alloc_like(const GridMeasure& mu) {
  GridMeasure out;
  out.grid = mu.grid;
  out.m.resize(mu.m.size());
  return out;
}

}  // namespace

GridMeasure step_explicit(const GridMeasure& mu, double t, const ProblemSpec& spec,
                          const DiscreteKernels& kern, double dt, Limiter limiter,
                          StepWorkspace* ws) {
  StepWorkspace local;
  StepWorkspace& w = ws ? *ws : local;
  const int J = mu.grid.J;
  const double dx = mu.grid.dx;

  GridMeasure next = alloc_like(mu);
  double S = 0.0;
  prepare_step(mu, t, spec, kern, dt, limiter, w, next, S);
  coag_explicit(kern, mu.m, w.C);

  for (int j = 1; j <= J; ++j)
    next.m[j] = mu.m[j] - dt / dx * (w.f[j] - w.f[j - 1]) - dt * w.d[j] * mu.m[j] +
                dt * (w.F[j] + w.C[j]);
  return next;
}

GridMeasure step_semi_implicit(const GridMeasure& mu, double t, const ProblemSpec& spec,
                               const DiscreteKernels& kern, double dt, Limiter limiter,
                               StepWorkspace* ws) {
  StepWorkspace local;
  StepWorkspace& w = ws ? *ws : local;
  const int J = mu.grid.J;
  const double dx = mu.grid.dx;

  GridMeasure next = alloc_like(mu);
  double S = 0.0;
  prepare_step(mu, t, spec, kern, dt, limiter, w, next, S);

  if (!kern.has_coag()) {
    for (int j = 1; j <= J; ++j)
      next.m[j] =
          mu.m[j] - dt / dx * (w.f[j] - w.f[j - 1]) - dt * w.d[j] * mu.m[j] + dt * w.F[j];
    return next;
  }

  // Losses act on the new mass and gains reference the already-updated cells
  // below, so the system is lower-triangular in j; one ascending sweep
  // solves it exactly.
  std::fill(w.gain.begin(), w.gain.end(), 0.0);
  for (int j = 1; j <= J; ++j) {
    double loss = 0.0;
    for (int i = 1; i <= J; ++i) loss += kern.kappa(i, j) * mu.m[i];
    w.loss[j] = loss;
  }
  for (int j = 1; j <= J; ++j) {
    double expl =
        mu.m[j] - dt / dx * (w.f[j] - w.f[j - 1]) - dt * w.d[j] * mu.m[j] + dt * w.F[j];
    next.m[j] = (expl + 0.5 * dt * w.gain[j]) / (1.0 + dt * w.loss[j]);
    for (int l = 1; l <= J - j; ++l) w.gain[j + l] += kern.kappa(j, l) * next.m[j] * mu.m[l];
  }
  return next;
}

GridMeasure step_rk2(const GridMeasure& mu, double t, const ProblemSpec& spec,
                     const DiscreteKernels& kern, double dt, Limiter limiter,
                     StepWorkspace* ws) {
  GridMeasure s1 = step_explicit(mu, t, spec, kern, dt, limiter, ws);
  GridMeasure s2 = step_explicit(s1, t + dt, spec, kern, dt, limiter, ws);
  for (size_t j = 0; j < s2.m.size(); ++j) s2.m[j] = 0.5 * (mu.m[j] + s2.m[j]);
  return s2;
}

GridMeasure step_richardson(const GridMeasure& mu, double t, const ProblemSpec& spec,
                            const DiscreteKernels& kern, double dt, Limiter limiter,
                            StepWorkspace* ws, StepDiagnostics* diag) {
  GridMeasure full = step_semi_implicit(mu, t, spec, kern, dt, limiter, ws);
  GridMeasure half = step_semi_implicit(mu, t, spec, kern, 0.5 * dt, limiter, ws);
  half = step_semi_implicit(half, t + 0.5 * dt, spec, kern, 0.5 * dt, limiter, ws);
  for (size_t j = 0; j < half.m.size(); ++j) half.m[j] = 2.0 * half.m[j] - full.m[j];
  if (diag) {
    double tv = total_variation(half);
    for (double v : half.m) {
      diag->min_mass = std::min(diag->min_mass, v);
      if (v < -1e-12 * tv) ++diag->negative_events;
    }
  }
  return half;
}

GridMeasure SolveResult::at(double t) const {
  if (times.empty()) throw std::runtime_error("trajectory: empty");
  if (t <= times.front()) return states.front();
  if (t >= times.back()) return states.back();
  if (states.size() != times.size() || states.size() < 2)
    throw std::runtime_error("trajectory: interior evaluation needs all-steps storage");
  auto it = std::upper_bound(times.begin(), times.end(), t);
  size_t k = static_cast<size_t>(it - times.begin()) - 1;
  double w = (t - times[k]) / (times[k + 1] - times[k]);
  GridMeasure out = states[k];
  for (size_t j = 0; j < out.m.size(); ++j)
    out.m[j] = (1.0 - w) * states[k].m[j] + w * states[k + 1].m[j];
  return out;
}

SolveResult solve(const GridMeasure& mu0, const ProblemSpec& spec, const DiscreteKernels& kern,
                  const SchemeConfig& cfg) {
  if (!(cfg.dt > 0.0)) throw std::invalid_argument("solve: dt must be positive");
  if (cfg.T < 0.0) throw std::invalid_argument("solve: T must be nonnegative");
  if (cfg.time_order != 1 && cfg.time_order != 2)
    throw std::invalid_argument("solve: time_order must be 1 or 2");
  double steps_real = cfg.T / cfg.dt;
  long long steps = std::llround(steps_real);
  if (std::abs(steps_real - static_cast<double>(steps)) >
      1e-9 * std::max(1.0, steps_real))
    throw std::invalid_argument("solve: T must be an integer multiple of dt");

  SolveResult res;
  res.grid = mu0.grid;
  res.cfl_bound = cfl_max_dt(spec.constants, mu0.grid,
                             cfg.variant, cfg.T, total_variation(mu0), cfg.cfl_cap);
  res.cfl_satisfied = cfg.dt <= res.cfl_bound * (1.0 + 1e-12);
  if (!res.cfl_satisfied && cfg.cfl_policy == CflPolicy::enforce)
    throw std::runtime_error("solve: dt exceeds the stability bound " +
                             std::to_string(res.cfl_bound));
  res.initial_moment1 = moment(mu0, 1);

  auto t0 = std::chrono::steady_clock::now();
  StepWorkspace ws;
  StepDiagnostics diag;
  diag.min_mass = mu0.m.empty() ? 0.0 : *std::min_element(mu0.m.begin(), mu0.m.end());

  const bool keep_all = cfg.storage == Storage::all_steps;
  if (keep_all) {
    res.times.reserve(static_cast<size_t>(steps) + 1);
    res.states.reserve(static_cast<size_t>(steps) + 1);
    res.times.push_back(0.0);
    res.states.push_back(mu0);
  }

  GridMeasure state = mu0;
  for (long long k = 0; k < steps; ++k) {
    double t = static_cast<double>(k) * cfg.dt;
    GridMeasure next;
    if (cfg.variant == Variant::explicit_scheme)
      next = cfg.time_order == 1 ? step_explicit(state, t, spec, kern, cfg.dt, cfg.limiter, &ws)
                                 : step_rk2(state, t, spec, kern, cfg.dt, cfg.limiter, &ws);
    else
      next = cfg.time_order == 1
                 ? step_semi_implicit(state, t, spec, kern, cfg.dt, cfg.limiter, &ws)
                 : step_richardson(state, t, spec, kern, cfg.dt, cfg.limiter, &ws, nullptr);

    double tv = total_variation(next);
    for (double v : next.m) {
      diag.min_mass = std::min(diag.min_mass, v);
      if (v < -1e-12 * tv) ++diag.negative_events;
    }
    state = std::move(next);
    if (keep_all) {
      res.times.push_back(static_cast<double>(k + 1) * cfg.dt);
      res.states.push_back(state);
    }
  }
  if (!keep_all) {
    res.times.push_back(cfg.T);
    res.states.push_back(std::move(state));
  }
  auto t1 = std::chrono::steady_clock::now();
  res.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  res.min_mass = diag.min_mass;
  res.negative_events = diag.negative_events;
  res.final_moment1 = moment(res.states.back(), 1);
  return res;
}

}  // namespace cfpop

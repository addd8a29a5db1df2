#pragma once

namespace cfpop {

enum class Variant { explicit_scheme, semi_implicit };

// standard: classical minmod (min of magnitudes). literal: the max-of-
// magnitudes variant kept for comparison experiments. off: first-order
// upwind fluxes everywhere.
enum class Limiter { standard, literal, off };

enum class CflPolicy { enforce, warn };

enum class Storage { all_steps, final_only };

struct SchemeConfig {
  Variant variant = Variant::explicit_scheme;
  int time_order = 2;
  Limiter limiter = Limiter::standard;
  CflPolicy cfl_policy = CflPolicy::warn;
  double dt = 0.0;
  double T = 0.0;
  Storage storage = Storage::final_only;
  double cfl_cap = 1.0;  // bound reported when every stability constant vanishes
};

}  // namespace cfpop

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cfpop/convergence.hpp"
#include "cfpop/examples.hpp"
#include "cfpop/kernels.hpp"
#include "cfpop/problem_file.hpp"
#include "cfpop/projection.hpp"
#include "cfpop/stepper.hpp"

namespace {

using cfpop::Variant;
using cfpop::Limiter;
using cfpop::CflPolicy;
using cfpop::Storage;
using ojson = nlohmann::ordered_json;

Variant to_variant(const std::string& s) {
  return s == "semi-implicit" ? Variant::semi_implicit : Variant::explicit_scheme;
}

Limiter to_limiter(const std::string& s) {
  if (s == "paper") return Limiter::literal;
  if (s == "off") return Limiter::off;
  return Limiter::standard;
}

// One (t, x, mass) row per cell of each stored state; 15 significant digits.
void write_states_csv(const cfpop::SolveResult& res, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "t,x,mass\n";
  char buf[128];
  for (size_t k = 0; k < res.states.size(); ++k) {
    const auto& mu = res.states[k];
    for (int j = 0; j <= mu.grid.J; ++j) {
      std::snprintf(buf, sizeof buf, "%.15g,%.15g,%.15g\n", res.times[k], mu.grid.site(j),
                    mu.m[j]);
      out << buf;
    }
  }
}

void write_final_csv(const cfpop::SolveResult& res, double T, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "t,x,mass\n";
  char buf[128];
  const auto& mu = res.final_state();
  for (int j = 0; j <= mu.grid.J; ++j) {
    std::snprintf(buf, sizeof buf, "%.15g,%.15g,%.15g\n", T, mu.grid.site(j), mu.m[j]);
    out << buf;
  }
}

struct RunOptions {
  std::string example, problem_path, out_dir = ".";
  std::string variant = "explicit", limiter = "min", store = "final", cfl = "warn";
  int order = 2;
  int nx = 0, nt = 0;
  double dt = 0.0;
};

int cmd_run(const RunOptions& opt) {
  std::string name;
  std::string title;
  double x_max = 0.0, T = 0.0;
  cfpop::ProblemSpec spec;
  cfpop::InitialData initial;
  std::function<double(double)> frag_halfcell;
  int default_nx = 0, default_nt = 0;

  if (!opt.example.empty()) {
    cfpop::ExampleDef ex = cfpop::find_example(opt.example);
    name = "example " + ex.name;
    title = ex.title;
    x_max = ex.x_max;
    T = ex.T;
    spec = ex.problem;
    initial = ex.initial;
    frag_halfcell = ex.frag_halfcell;
    default_nx = ex.default_nx;
    default_nt = ex.default_nt;
  } else {
    cfpop::LoadedProblem lp = cfpop::load_problem_file(opt.problem_path);
    name = lp.name;
    title = lp.name;
    x_max = lp.x_max;
    T = lp.T;
    spec = lp.problem;
    initial = lp.initial;
  }

  int nx = opt.nx > 0 ? opt.nx : default_nx;
  if (nx <= 0) throw std::invalid_argument("run: --nx is required for problem files");
  cfpop::GridSpec grid = cfpop::GridSpec::make(x_max, nx);
  cfpop::validate_problem(spec, grid);
  if (!spec.constants_supplied) spec.constants = cfpop::estimate_constants(spec, grid);

  cfpop::SchemeConfig cfg;
  cfg.variant = to_variant(opt.variant);
  cfg.time_order = opt.order;
  cfg.limiter = to_limiter(opt.limiter);
  cfg.cfl_policy = opt.cfl == "enforce" ? CflPolicy::enforce : CflPolicy::warn;
  cfg.storage = opt.store == "all" ? Storage::all_steps : Storage::final_only;
  cfg.T = T;
  int nt = opt.nt;
  if (opt.dt > 0.0) {
    cfg.dt = opt.dt;
    nt = T > 0.0 ? static_cast<int>(std::llround(T / opt.dt)) : 0;
  } else {
    if (nt <= 0) nt = default_nt;
    if (nt <= 0) throw std::invalid_argument("run: give --nt or --dt");
    cfg.dt = T > 0.0 ? T / nt : 1.0;
  }

  cfpop::DiscreteKernels kern = cfpop::discretize_kernels(spec, grid);
  if (frag_halfcell && kern.has_frag()) kern.frag_rate[0] = frag_halfcell(grid.dx);
  cfpop::GridMeasure mu0 = cfpop::project_initial(initial, grid);

  cfpop::SolveResult res = cfpop::solve(mu0, spec, kern, cfg);
  if (!res.cfl_satisfied)
    std::cerr << "warning: dt = " << cfg.dt << " exceeds the stability bound "
              << res.cfl_bound << "\n";

  std::filesystem::path dir(opt.out_dir);
  std::filesystem::create_directories(dir);
  write_final_csv(res, T, dir / "final_state.csv");
  if (cfg.storage == Storage::all_steps) write_states_csv(res, dir / "trajectory.csv");

  ojson man;
  man["name"] = name;
  man["title"] = title;
  if (!opt.example.empty()) man["example"] = opt.example;
  if (!opt.problem_path.empty()) man["problem_file"] = opt.problem_path;
  man["variant"] = opt.variant;
  man["time_order"] = opt.order;
  man["limiter"] = opt.limiter;
  man["grid"] = {{"x_max", grid.x_max}, {"J", grid.J}, {"dx", grid.dx}};
  man["T"] = T;
  man["nt"] = nt;
  man["dt"] = cfg.dt;
  man["storage"] = opt.store;
  man["cfl"] = {{"policy", opt.cfl},
                {"bound", res.cfl_bound},
                {"satisfied", res.cfl_satisfied}};
  man["constants"] = {{"zeta", spec.constants.zeta},
                      {"C_kappa", spec.constants.C_kappa},
                      {"C_a", spec.constants.C_a},
                      {"C_b", spec.constants.C_b},
                      {"zeta_bar", spec.constants.zeta_bar},
                      {"estimated", spec.constants.estimated}};
  man["frag_halfcell_override"] = static_cast<bool>(frag_halfcell);
  man["diagnostics"] = {{"min_mass", res.min_mass},
                        {"negative_events", res.negative_events},
                        {"moment1_initial", res.initial_moment1},
                        {"moment1_final", res.final_moment1},
                        {"moment1_drift", res.final_moment1 - res.initial_moment1},
                        {"wall_ms", res.wall_ms}};
  std::ofstream mf(dir / "manifest.json");
  mf << man.dump(2) << "\n";

  std::cout << "wrote " << (dir / "final_state.csv").string() << "\n";
  return 0;
}

struct ConvergeOptions {
  std::string example, out_dir = ".";
  std::string variant = "explicit", limiter = "min";
  int order = 2;
  int nx = 0, nt = 0, n_levels = 0;
};

int cmd_converge(const ConvergeOptions& opt) {
  cfpop::ExampleDef ex = cfpop::find_example(opt.example);
  std::vector<std::pair<int, int>> levels;
  if (opt.nx > 0 || opt.nt > 0) {
    if (opt.nx <= 0 || opt.nt <= 0)
      throw std::invalid_argument("converge: give both --nx and --nt for a custom base level");
    int n = opt.n_levels > 0 ? opt.n_levels : static_cast<int>(ex.levels.size());
    for (int k = 0; k < n; ++k) levels.emplace_back(opt.nx << k, opt.nt << k);
  } else {
    levels = ex.levels;
    if (opt.n_levels > 0) {
      while (static_cast<int>(levels.size()) > opt.n_levels) levels.pop_back();
      while (static_cast<int>(levels.size()) < opt.n_levels) {
        auto [nx, nt] = levels.back();
        levels.emplace_back(2 * nx, 2 * nt);
      }
    }
  }

  cfpop::ConvergenceOptions copt;
  copt.variant = to_variant(opt.variant);
  copt.time_order = opt.order;
  copt.limiter = to_limiter(opt.limiter);
  std::vector<cfpop::ConvergenceRow> rows = cfpop::run_convergence(ex, levels, copt);

  std::filesystem::path dir(opt.out_dir);
  std::filesystem::create_directories(dir);
  std::ofstream out(dir / "convergence.csv");
  if (!out) throw std::runtime_error("cannot write convergence.csv");
  cfpop::emit_table_csv(rows, out);
  cfpop::emit_table_csv(rows, std::cout);
  return 0;
}

int cmd_examples(bool as_json) {
  std::vector<cfpop::ExampleDef> defs = cfpop::all_examples();
  if (as_json) {
    ojson arr = ojson::array();
    for (const auto& ex : defs) {
      ojson levels = ojson::array();
      for (auto [nx, nt] : ex.levels) levels.push_back({nx, nt});
      arr.push_back({{"name", ex.name},
                     {"title", ex.title},
                     {"report", ex.report},
                     {"x_max", ex.x_max},
                     {"T", ex.T},
                     {"default_nx", ex.default_nx},
                     {"default_nt", ex.default_nt},
                     {"levels", levels}});
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& ex : defs) {
      std::cout << "example " << ex.name << ": " << ex.title << "\n"
                << "  domain [0, " << ex.x_max << "], T = " << ex.T << "\n"
                << "  produces: " << ex.report << "\n"
                << "  default level: Nx = " << ex.default_nx << ", Nt = " << ex.default_nt
                << ", study levels: " << ex.levels.size() << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"high-resolution finite-difference solver for size-structured "
               "coagulation-fragmentation population models"};
  app.require_subcommand(1);

  RunOptions ro;
  CLI::App* run = app.add_subcommand("run", "run a single simulation and write its final state");
  auto* ex_opt = run->add_option("--example", ro.example, "built-in example name (1..4)");
  auto* pf_opt = run->add_option("--problem", ro.problem_path, "path to a JSON problem file");
  ex_opt->excludes(pf_opt);
  run->add_option("--variant", ro.variant, "scheme variant")
      ->check(CLI::IsMember({"explicit", "semi-implicit"}))
      ->capture_default_str();
  run->add_option("--order", ro.order, "time accuracy order")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  run->add_option("--limiter", ro.limiter, "slope limiter mode")
      ->check(CLI::IsMember({"min", "paper", "off"}))
      ->capture_default_str();
  run->add_option("--nx", ro.nx, "number of size cells");
  auto* nt_opt = run->add_option("--nt", ro.nt, "number of time steps");
  auto* dt_opt = run->add_option("--dt", ro.dt, "time step size");
  nt_opt->excludes(dt_opt);
  dt_opt->excludes(nt_opt);
  run->add_option("--out", ro.out_dir, "output directory")->capture_default_str();
  run->add_option("--store", ro.store, "state storage policy")
      ->check(CLI::IsMember({"all", "final"}))
      ->capture_default_str();
  run->add_option("--cfl", ro.cfl, "time-step bound policy")
      ->check(CLI::IsMember({"enforce", "warn"}))
      ->capture_default_str();

  ConvergeOptions co;
  CLI::App* conv = app.add_subcommand("converge", "run a refinement study and write the table");
  conv->add_option("--example", co.example, "built-in example name (1..4)")->required();
  conv->add_option("--variant", co.variant, "scheme variant")
      ->check(CLI::IsMember({"explicit", "semi-implicit"}))
      ->capture_default_str();
  conv->add_option("--order", co.order, "time accuracy order")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  conv->add_option("--limiter", co.limiter, "slope limiter mode")
      ->check(CLI::IsMember({"min", "paper", "off"}))
      ->capture_default_str();
  conv->add_option("--nx", co.nx, "base level size cells");
  conv->add_option("--nt", co.nt, "base level time steps");
  conv->add_option("--levels", co.n_levels, "number of refinement levels");
  conv->add_option("--out", co.out_dir, "output directory")->capture_default_str();

  bool ex_json = false;
  CLI::App* exl = app.add_subcommand("examples", "list the built-in examples");
  exl->add_flag("--json", ex_json, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      if (ro.example.empty() && ro.problem_path.empty())
        throw std::invalid_argument("run: give --example or --problem");
      return cmd_run(ro);
    }
    if (conv->parsed()) return cmd_converge(co);
    return cmd_examples(ex_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

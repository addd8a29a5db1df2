#include <cmath>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <doctest.h>

#include <json.hpp>

#include "cfpop/convergence.hpp"
#include "cfpop/examples.hpp"
#include "cfpop/flat_metric.hpp"
#include "cfpop/stepper.hpp"

using namespace cfpop;

TEST_CASE("example registry") {
  auto all = all_examples();
  REQUIRE(all.size() == 4);
  CHECK(all[0].name == "1");
  CHECK(all[3].name == "4");
  CHECK(find_example("3").self_convergence);
  try {
    find_example("5");
    FAIL("expected a lookup failure");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("valid names") != std::string::npos);
  }

  CHECK(find_example("1").problem.constants_supplied);
  CHECK(find_example("2").problem.constants_supplied);
  CHECK(find_example("3").problem.constants_supplied);
  CHECK(!find_example("4").problem.constants_supplied);
  for (const auto& ex : all) {
    CHECK(!ex.levels.empty());
    CHECK(ex.default_nx > 0);
    CHECK(ex.T > 0.0);
  }
}

TEST_CASE("exact solutions start at the initial data") {
  for (const char* name : {"1", "2"}) {
    ExampleDef ex = find_example(name);
    REQUIRE(ex.has_exact());
    GridSpec g = GridSpec::make(ex.x_max, 64);
    GridMeasure init = project_initial(ex.initial, g);
    for (int j = 0; j <= g.J; ++j) {
      double e = ex.exact_cell(0.0, g.cell_lo(j), g.cell_hi(j));
      CHECK(init.m[j] == doctest::Approx(e).epsilon(1e-12));
    }
  }
}

TEST_CASE("growth rates respect the boundary conditions") {
  ExampleDef ex = find_example("3");
  GridSpec g = GridSpec::make(ex.x_max, 50);
  std::vector<double> gv(g.J + 1, 0.0);
  GridMeasure zero = GridMeasure::zero(g);
  ex.problem.growth(0.0, zero, gv);
  CHECK(gv[0] > 0.0);
  CHECK(std::abs(gv[g.J]) < 1e-12);
  CHECK_NOTHROW(validate_problem(ex.problem, g));
}

TEST_CASE("example one drops count and keeps mass") {
  ExampleDef ex = find_example("1");
  GridSpec g = GridSpec::make(ex.x_max, 400);
  GridMeasure init = project_initial(ex.initial, g);
  DiscreteKernels kern = discretize_kernels(ex.problem, g);
  SchemeConfig cfg;
  cfg.T = ex.T;
  cfg.dt = ex.T / 1000;
  SolveResult res = solve(init, ex.problem, kern, cfg);

  // c(t) = 2 / (2 + t): count c(T), mass stays put up to half-cell binning.
  CHECK(moment(res.final_state(), 0) == doctest::Approx(2.0 / 2.5).epsilon(5e-3));
  CHECK(res.final_moment1 == doctest::Approx(res.initial_moment1).epsilon(1e-3));
}

TEST_CASE("example two grows count and keeps mass") {
  ExampleDef ex = find_example("2");
  GridSpec g = GridSpec::make(ex.x_max, 400);
  GridMeasure init = project_initial(ex.initial, g);
  DiscreteKernels kern = discretize_kernels(ex.problem, g);
  SchemeConfig cfg;
  cfg.T = ex.T;
  cfg.dt = ex.T / 1000;
  SolveResult res = solve(init, ex.problem, kern, cfg);

  // c(t) = 1 + t: count 1.5 at T = 1/2, mass constant up to quadrature error.
  CHECK(moment(res.final_state(), 0) == doctest::Approx(1.5).epsilon(5e-3));
  CHECK(res.final_moment1 == doctest::Approx(res.initial_moment1).epsilon(2e-3));
}

TEST_CASE("mixed fragmentation example wiring") {
  ExampleDef ex = find_example("4");
  GridSpec g = GridSpec::make(ex.x_max, 200);
  REQUIRE(static_cast<bool>(ex.frag_halfcell));
  CHECK(ex.frag_halfcell(g.dx) == doctest::Approx(std::log(50.0) / (0.5 * g.dx)));

  DiscreteKernels kern = discretize_kernels(ex.problem, g);
  // Every splitting parent front-loads two fragments per split.
  for (int i = 0; i <= g.J; ++i) {
    if (g.site(i) < 5.0) continue;  // density support starts at 5
    double s = 0.0;
    for (double v : kern.daughter[i]) s += v;
    CHECK(s == doctest::Approx(2.0).epsilon(1e-12));
  }

  GridMeasure init = project_initial(ex.initial, g);
  CHECK(total_variation(init) == doctest::Approx(15.0).epsilon(1e-12));
  CHECK(moment(init, 1) == doctest::Approx(115.0).epsilon(1e-9));
  // Atoms sit alone in their cells at this resolution.
  for (int s = 1; s <= 4; ++s) CHECK(init.m[g.cell_of(s)] == doctest::Approx(1.0));
  CHECK(init.m[g.cell_of(5.0)] > 1.0);
}

TEST_CASE("coarsening conserves mass and tightens the comb") {
  ExampleDef ex = find_example("1");
  GridSpec fine = GridSpec::make(ex.x_max, 64);
  GridMeasure mf = project_initial(ex.initial, fine);

  GridMeasure mc = restrict_to_coarser(mf);
  REQUIRE(mc.grid.J == 32);
  double sf = 0.0, sc = 0.0;
  for (double v : mf.m) sf += v;
  for (double v : mc.m) sc += v;
  CHECK(sc == doctest::Approx(sf).epsilon(1e-14));

  GridSpec coarse = GridSpec::make(ex.x_max, 32);
  GridMeasure target = project_initial(ex.initial, coarse);
  double direct = flat_distance(to_atomic(mf), to_atomic(target));
  double restricted = flat_distance(to_atomic(mc), to_atomic(target));
  CHECK(restricted < direct);

  GridMeasure odd = GridMeasure::zero(GridSpec::make(1.0, 5));
  CHECK_THROWS(restrict_to_coarser(odd));
  GridMeasure tiny = GridMeasure::zero(GridSpec::make(1.0, 2));
  CHECK_THROWS(restrict_to_coarser(tiny));
}

TEST_CASE("convergence study on coarse levels") {
  ExampleDef ex = find_example("1");
  std::vector<std::pair<int, int>> levels = {{24, 30}, {48, 60}};
  auto rows = run_convergence(ex, levels);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].nx == 24);
  CHECK(!rows[0].has_order);
  CHECK(rows[1].has_order);
  CHECK(rows[0].error > rows[1].error);
  CHECK(rows[1].error > 0.0);

  std::vector<std::pair<int, int>> bad = {{24, 30}, {36, 45}};
  CHECK_THROWS(run_convergence(ex, bad));
}

TEST_CASE("self-convergence study restricts between levels") {
  ExampleDef ex = find_example("3");
  std::vector<std::pair<int, int>> levels = {{32, 80}, {64, 160}};
  auto rows = run_convergence(ex, levels);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].error > 0.0);
  CHECK(rows[1].error > 0.0);
  CHECK(rows[1].error < rows[0].error);
}

TEST_CASE("table emission round trip") {
  std::vector<ConvergenceRow> rows = {
      {100, 250, 2.0733e-3, false, 0.0},
      {200, 500, 5.4068e-4, true, 1.9391},
  };
  std::stringstream csv;
  emit_table_csv(rows, csv);
  std::string first = csv.str();
  CHECK(first.find("Nx,Nt,error,order") == 0);

  std::stringstream in(first);
  auto back = parse_table_csv(in);
  REQUIRE(back.size() == 2);
  CHECK(back[0].nx == 100);
  CHECK(!back[0].has_order);
  CHECK(back[1].has_order);
  CHECK(back[1].order == doctest::Approx(1.9391));
  CHECK(back[1].error == doctest::Approx(5.4068e-4).epsilon(1e-4));

  std::stringstream again;
  emit_table_csv(back, again);
  CHECK(again.str() == first);

  std::stringstream empty_csv;
  emit_table_csv({}, empty_csv);
  CHECK(empty_csv.str() == "Nx,Nt,error,order\n");

  std::stringstream js;
  emit_table_json(rows, js);
  auto parsed = nlohmann::json::parse(js.str());
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0]["order"].is_null());
  CHECK(parsed[1]["order"].get<double>() == doctest::Approx(1.9391));
  CHECK(parsed[0]["nx"] == 100);
}

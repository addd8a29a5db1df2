#include <cmath>

#include <doctest.h>

#include "cfpop/kernels.hpp"
#include "cfpop/problem.hpp"

using namespace cfpop;

TEST_CASE("fragmentation rate cell averages") {
  GridSpec g = GridSpec::make(4.0, 4);  // dx = 1

  auto lin = discretize_frag_rate([](double x) { return x; }, g);
  CHECK(lin[0] == doctest::Approx(0.25).epsilon(1e-14));  // average of x over [0, 1/2)
  CHECK(lin[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(lin[4] == doctest::Approx(4.0).epsilon(1e-14));

  auto one = discretize_frag_rate([](double) { return 1.0; }, g);
  for (double v : one) CHECK(v == doctest::Approx(1.0).epsilon(1e-15));

  // Simpson is exact for polynomials: average of x^2 over [1/2, 3/2).
  auto sq = discretize_frag_rate([](double x) { return x * x; }, g);
  CHECK(sq[1] == doctest::Approx(13.0 / 12.0).epsilon(1e-14));

  CHECK_THROWS(discretize_frag_rate([](double x) { return 1.0 - x; }, g));
}

TEST_CASE("coagulation kernel cell averages") {
  GridSpec g = GridSpec::make(2.0, 4);  // dx = 0.5

  auto ones = discretize_coag_kernel([](double, double) { return 1.0; }, g, false);
  for (double v : ones) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));

  // Affine-plus-product kernels average to the kernel at the cell centroids.
  auto affine = discretize_coag_kernel(
      [](double x, double y) { return 2.0 + 0.5 * (x + y) + 0.125 * x * y; }, g, false);
  auto centroid = [&](int j) { return j == 0 ? 0.25 * g.dx : j * g.dx; };
  auto at = [&](int i, int j) { return affine[static_cast<size_t>(i) * (g.J + 1) + j]; };
  for (int i = 0; i <= g.J; ++i)
    for (int j = 0; j <= g.J; ++j) {
      double want = 2.0 + 0.5 * (centroid(i) + centroid(j)) + 0.125 * centroid(i) * centroid(j);
      CHECK(at(i, j) == doctest::Approx(want).epsilon(1e-13));
    }

  CHECK_THROWS(discretize_coag_kernel([](double x, double) { return x; }, g, false));
  CHECK_THROWS(discretize_coag_kernel([](double, double) { return -1.0; }, g, false));
}

TEST_CASE("coagulation truncation zeroes escaping pairs") {
  GridSpec g = GridSpec::make(2.0, 4);
  auto k = discretize_coag_kernel([](double, double) { return 1.0; }, g, true);
  auto at = [&](int i, int j) { return k[static_cast<size_t>(i) * (g.J + 1) + j]; };
  CHECK(at(1, 3) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(at(2, 2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(at(0, 4) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(at(2, 3) == 0.0);
  CHECK(at(3, 2) == 0.0);
  CHECK(at(4, 4) == 0.0);
}

TEST_CASE("binary split daughters sum to two per parent") {
  GridSpec g = GridSpec::make(10.0, 20);
  DaughterKernel b;
  b.density = [](double parent, double x) { return x <= parent ? 2.0 / parent : 0.0; };
  auto rows = discretize_daughter(b, g);
  REQUIRE(rows.size() == 21);
  CHECK(rows[0].size() == 1);
  CHECK(rows[0][0] == doctest::Approx(2.0).epsilon(1e-13));
  for (int i = 1; i <= 20; ++i) {
    double s = 0.0;
    for (double v : rows[i]) s += v;
    CHECK(s == doctest::Approx(2.0).epsilon(1e-13));
  }
  // Parent of size 1 splits uniformly: cell 1 holds [1/4, 3/4) of 2/1.
  CHECK(rows[2][1] == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("daughter atoms land in the parent-clipped cells") {
  GridSpec g = GridSpec::make(20.0, 40);  // dx = 0.5
  DaughterKernel b;
  b.cell_integral = [](double parent, double lo, double hi) {
    double a = std::max(lo, 5.0), c = std::min(hi, parent);
    return c > a ? 2.0 / parent * (c - a) : 0.0;
  };
  for (int s = 1; s <= 5; ++s)
    b.atoms.push_back({static_cast<double>(s), [](double parent) { return 2.0 / parent; }});
  auto rows = discretize_daughter(b, g);

  const auto& row = rows[20];  // parent size 10
  double s = 0.0;
  for (double v : row) s += v;
  CHECK(s == doctest::Approx(2.0).epsilon(1e-13));  // 5 atoms * 0.2 + density mass 2/10 * 5
  for (int a = 1; a <= 5; ++a) CHECK(row[2 * a] >= 0.2);
  CHECK(row[1] == 0.0);  // nothing between the atoms

  // Parent of size 3 only keeps the atoms at 1, 2 and 3.
  const auto& small = rows[6];
  double s6 = 0.0;
  for (double v : small) s6 += v;
  CHECK(s6 == doctest::Approx(3.0 * 2.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("constant estimation from samples") {
  GridSpec g = GridSpec::make(20.0, 100);
  ProblemSpec spec;
  spec.x_max = 20.0;
  spec.frag_rate = [](double x) { return x; };
  spec.daughter.density = [](double parent, double x) { return x <= parent ? 2.0 / parent : 0.0; };

  ProblemConstants c = estimate_constants(spec, g);
  CHECK(c.estimated);
  CHECK(c.zeta == 0.0);
  CHECK(c.C_kappa == 0.0);
  CHECK(c.C_a == doctest::Approx(22.0).epsilon(1e-12));
  CHECK(c.C_b == doctest::Approx(2.2).epsilon(1e-3));
  CHECK(c.zeta_bar == doctest::Approx(22.0).epsilon(1e-12));

  spec.coag = [](double x, double y) { return 1.0 + 0.01 * (x + y); };
  c = estimate_constants(spec, g);
  CHECK(c.C_kappa == doctest::Approx(1.1 * 1.4).epsilon(1e-12));
}

TEST_CASE("stability bound formulas") {
  GridSpec g = GridSpec::make(20.0, 100);  // dx = 0.2

  ProblemConstants c;
  c.zeta = 2.0;
  c.C_kappa = 1.0;
  c.C_a = 20.0;
  c.C_b = 2.0;
  c.zeta_bar = 20.0;
  double tv0 = 1.0, T = 0.5;

  double expl = cfl_max_dt(c, g, Variant::explicit_scheme, T, tv0, 1.0);
  double want = 1.0 / (tv0 * std::exp(42.0 * 0.5) + 20.0 * 2.0 + (1.0 + 7.5) * 2.0);
  CHECK(expl == doctest::Approx(want).epsilon(1e-13));

  double semi = cfl_max_dt(c, g, Variant::semi_implicit, T, tv0, 1.0);
  CHECK(semi == doctest::Approx(1.0 / 190.0).epsilon(1e-13));
  CHECK(semi > expl);

  ProblemConstants coag_only;
  coag_only.C_kappa = 1.0;
  CHECK(cfl_max_dt(coag_only, g, Variant::explicit_scheme, T, 2.0, 1.0) ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK(cfl_max_dt(coag_only, g, Variant::semi_implicit, T, 2.0, 123.0) == 123.0);

  ProblemConstants none;
  CHECK(cfl_max_dt(none, g, Variant::explicit_scheme, T, 1.0, 123.0) == 123.0);
}

TEST_CASE("problem validation") {
  GridSpec g = GridSpec::make(20.0, 64);

  ProblemSpec ok;
  ok.x_max = 20.0;
  ok.growth = rate_of_x([](double x) { return 2.0 - 2.0 * std::exp(x - 20.0); });
  ok.birth = rate_const(0.5);
  ok.death = rate_const(1.0);
  ok.coag = [](double, double) { return 1.0; };
  CHECK_NOTHROW(validate_problem(ok, g));

  ProblemSpec asym = ok;
  asym.coag = [](double x, double) { return 1.0 + x; };
  CHECK_THROWS(validate_problem(asym, g));

  ProblemSpec orphan_birth;
  orphan_birth.x_max = 20.0;
  orphan_birth.birth = rate_const(1.0);
  CHECK_THROWS(validate_problem(orphan_birth, g));

  ProblemSpec bad_growth = ok;
  bad_growth.growth = rate_const(1.0);  // does not vanish at x_max
  CHECK_THROWS(validate_problem(bad_growth, g));

  ProblemSpec zero_at_0 = ok;  // stalls in the first cell, fine elsewhere
  zero_at_0.growth = rate_of_x([](double x) { return x < 1.0 ? 0.0 : (x - 1.0) * (20.0 - x); });
  CHECK_THROWS(validate_problem(zero_at_0, g));

  ProblemSpec fat_daughter = ok;
  fat_daughter.frag_rate = [](double) { return 1.0; };
  fat_daughter.daughter.density = [](double, double) { return 1.0; };  // ignores the parent cap
  CHECK_THROWS(validate_problem(fat_daughter, g));
}

TEST_CASE("kernel bundle wiring") {
  GridSpec g = GridSpec::make(2.0, 4);
  ProblemSpec spec;
  spec.x_max = 2.0;
  DiscreteKernels none = discretize_kernels(spec, g);
  CHECK(!none.has_coag());
  CHECK(!none.has_frag());
  CHECK(none.daughter.empty());

  spec.coag = [](double, double) { return 3.0; };
  spec.frag_rate = [](double) { return 2.0; };
  spec.daughter.density = [](double parent, double x) { return x <= parent ? 2.0 / parent : 0.0; };
  DiscreteKernels k = discretize_kernels(spec, g, true);
  CHECK(k.has_coag());
  CHECK(k.truncated);
  CHECK(k.kappa(1, 2) == doctest::Approx(3.0));
  CHECK(k.kappa(2, 3) == 0.0);
  CHECK(k.frag_rate[2] == doctest::Approx(2.0));
  CHECK(k.daughter.size() == 5);
}

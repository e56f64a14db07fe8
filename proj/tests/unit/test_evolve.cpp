#include <doctest.h>

#include <cmath>

#include "eulerform/errors.hpp"
#include "eulerform/euler_evolve.hpp"
#include "eulerform/fixtures.hpp"

using namespace eulerform;

TEST_CASE("a constant state is a fixed point of the step") {
  const Grid grid(8, 4);
  const FluidState st = constant_fixture(grid, EosModel::polytropic(1.4));
  const FluidState next = rk4_step(st, 0.01);
  CHECK(sup_norm(next.rho_log - st.rho_log) == 0.0);
  CHECK(sup_norm(next.v - st.v) == 0.0);
  CHECK(sup_norm(next.s - st.s) == 0.0);
  CHECK(next.time == doctest::Approx(0.01));
}

TEST_CASE("small data follows the linear acoustic wave") {
  // At rho = s = 0 the sound speed is 1, so rho = v1 = eps sin(x - t) solves
  // the linearised system.
  const Grid grid(32, 4);
  const double eps = 1e-6, T = 0.5;
  auto wave = [&](double t) {
    return ScalarField::from_function(grid, [&](double x, double, double) { return eps * std::sin(x - t); });
  };
  FluidState st{wave(0.0), VectorField(wave(0.0), ScalarField(grid), ScalarField(grid)), ScalarField(grid),
                EosModel::polytropic(1.4), 0.0};
  const FluidState end = evolve_to(st, T, 0.01);
  CHECK(end.time == doctest::Approx(T).epsilon(1e-14));
  CHECK(sup_norm(end.rho_log - wave(T)) <= 1e-4 * eps);
  CHECK(sup_norm(end.v[0] - wave(T)) <= 1e-4 * eps);
  CHECK(sup_norm(end.v[1]) == 0.0);
}

TEST_CASE("the step is fourth order in time") {
  const Grid grid(16, 4);
  const FluidState st = smooth_fixture(grid, EosModel::polytropic(1.4), 0.2, 0.2, 0.2);
  const double T = 0.4;
  const FluidState a = evolve_to(st, T, 0.04);
  const FluidState b = evolve_to(st, T, 0.02);
  const FluidState c = evolve_to(st, T, 0.01);
  const double ratio = sup_norm(a.v - b.v) / sup_norm(b.v - c.v);
  CHECK(ratio == doctest::Approx(16.0).epsilon(0.1));
}

TEST_CASE("completed initial data") {
  const Grid grid(16, 4);
  const FluidState st = smooth_fixture(grid, EosModel::polytropic(1.4));
  const InitialDataSet data = complete_initial_data(st);
  const EulerRhs rhs = euler_rhs(st);
  CHECK(sup_norm(data.dt_rho - rhs.d_rho) == 0.0);
  CHECK(sup_norm(data.dt_v - rhs.d_v) == 0.0);
  CHECK(sup_norm(data.grad_ent - gradient(st.s)) == 0.0);
  VectorField omega = flat_curl(st.v);
  for (int a = 0; a < 3; ++a)
    for (std::size_t q = 0; q < grid.size(); ++q) omega[a][q] *= std::exp(-st.rho_log[q]);
  CHECK(sup_norm(data.omega - omega) <= 1e-15);
}

TEST_CASE("slice stacks are centred and evenly spaced") {
  const Grid grid(8, 4);
  const FluidState st = smooth_fixture(grid, EosModel::polytropic(1.4));
  const SliceStack stack = build_slice_stack(st, 0.3, 0.02, 7);
  REQUIRE(stack.slices.size() == 7);
  CHECK(stack.t_center() == doctest::Approx(0.3).epsilon(1e-14));
  for (std::size_t k = 0; k < 7; ++k)
    CHECK(stack.slices[k].time == doctest::Approx(0.3 + (static_cast<double>(k) - 3) * 0.02).epsilon(1e-13));
  CHECK_NOTHROW(stack.validate());
  CHECK_THROWS_AS(build_slice_stack(st, 0.3, 0.02, 4), UsageError);
}

TEST_CASE("the filter removes the grid-scale mode and spares smooth data") {
  const Grid grid(16, 4);
  ScalarField zigzag = ScalarField::from_function(grid, [&](double x, double, double) {
    return std::cos(x * grid.n / 2.0);
  });
  apply_filter(zigzag, 1.0);
  CHECK(sup_norm(zigzag) <= 1e-12);
  ScalarField smooth = ScalarField::from_function(grid, [](double x, double, double) { return std::sin(x); });
  const ScalarField before = smooth;
  apply_filter(smooth, 1.0);
  CHECK(sup_norm(smooth - before) <= 1e-4);
}

TEST_CASE("non-finite results raise BlowupError") {
  const Grid grid(8, 4);
  FluidState st = constant_fixture(grid, EosModel::polytropic(1.4));
  st.v[0][3] = std::nan("");
  CHECK_THROWS_AS(rk4_step(st, 0.01), BlowupError);
}

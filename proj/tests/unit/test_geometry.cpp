#include <doctest.h>

#include <cmath>
#include <random>

#include "eulerform/acoustic_geometry.hpp"
#include "eulerform/errors.hpp"
#include "eulerform/euler_evolve.hpp"
#include "eulerform/fixtures.hpp"

using namespace eulerform;

TEST_CASE("at rest with c = 1 the metric is Minkowski") {
  const MetricPoint m = metric_at(1.0, Vec3{0, 0, 0});
  Eigen::Matrix4d eta = Eigen::Matrix4d::Identity();
  eta(0, 0) = -1.0;
  CHECK((m.g - eta).cwiseAbs().maxCoeff() == 0.0);
  CHECK((m.g_inv - eta).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("determinant is -c^-6 independent of v") {
  const MetricPoint m = metric_at(2.0, Vec3{0.3, -1.1, 0.7});
  CHECK(m.g.determinant() == doctest::Approx(-1.0 / 64.0).epsilon(1e-13));
  const MetricInvariants inv = metric_invariants(m);
  CHECK(inv.det_error <= 1e-12);
  CHECK(inv.inverse_error <= 1e-12);
}

TEST_CASE("B is future-directed, unit and g-orthogonal to the slices") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 200; ++t) {
    const double c = 0.5 + 1.25 * (u(rng) + 1.0);
    const MetricPoint m = metric_at(c, Vec3{u(rng), u(rng), u(rng)});
    const TransportVectorReport r = check_transport_vector(m);
    CHECK(r.max_error <= 1e-12);
    CHECK(r.future_directed);
    CHECK((inverse_metric_dyadic(m) - m.g_inv).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("metric rejects nonpositive sound speed") {
  CHECK_THROWS_AS(metric_at(0.0, Vec3{}), DomainError);
  CHECK_THROWS_AS(metric_at(-1.0, Vec3{}), DomainError);
}

TEST_CASE("wave operator of a plane wave at rest is the d'Alembertian") {
  const Grid grid(32, 4);
  const EosModel eos = EosModel::polytropic(1.4);
  const double dt = 0.1 * grid.spacing();
  SliceStack stack;
  stack.dt = dt;
  std::vector<ScalarField> f;
  for (int k = -2; k <= 2; ++k) {
    FluidState st{ScalarField(grid), VectorField(grid), ScalarField(grid), eos, k * dt};
    stack.slices.push_back(st);
    f.push_back(ScalarField::from_function(grid, [&](double x, double, double) { return std::sin(x - k * dt); }));
  }
  // c = 1 at rho = s = 0, so -d_t^2 f + lap f = 0 for f = sin(x - t).
  CHECK(sup_norm(box_g(stack, f)) <= 1e-4);
}

TEST_CASE("expanded wave operator agrees with the divergence form") {
  // Both discretise the same operator, so their gap shrinks at the stencil order.
  auto gap = [](int n) {
    const Grid grid(n, 4);
    const FluidState initial = smooth_fixture(grid, EosModel::polytropic(1.4));
    const SliceStack stack = build_slice_stack(initial, 0.25, 0.1 * grid.spacing(), 9);
    const auto f = slice_rho(stack);
    const ScalarField a = box_g(stack, f);
    const ScalarField b = box_g_divergence_form(stack, f);
    return sup_norm(a - b) / std::max(sup_norm(a), 1e-300);
  };
  const double g16 = gap(16), g32 = gap(32);
  CHECK(g32 <= 1e-3);
  CHECK(g16 / g32 >= 8.0);
}

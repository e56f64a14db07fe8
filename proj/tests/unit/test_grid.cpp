#include <doctest.h>

#include <cmath>
#include <numbers>

#include "eulerform/grid.hpp"

using namespace eulerform;

namespace {

double derivative_error(int n, int order) {
  const Grid g(n, order);
  const ScalarField f = ScalarField::from_function(g, [](double x, double y, double) { return std::sin(x) * std::cos(y); });
  const ScalarField exact = ScalarField::from_function(g, [](double x, double y, double) { return std::cos(x) * std::cos(y); });
  return sup_norm(partial_derivative(f, 0) - exact);
}

double delta(int a, int b) { return a == b ? 1.0 : 0.0; }

}  // namespace

TEST_CASE("grid geometry") {
  const Grid g(16, 4);
  CHECK(g.length() == doctest::Approx(2 * std::numbers::pi));
  CHECK(g.spacing() == doctest::Approx(2 * std::numbers::pi / 16));
  CHECK(g.index(1, 0, 0) == 256);
  CHECK(g.index(0, 0, 1) == 1);
}

TEST_CASE("fourth-order derivative of sin at n = 64") {
  const Grid g(64, 4);
  const ScalarField f = ScalarField::from_function(g, [](double x, double, double) { return std::sin(x); });
  const ScalarField exact = ScalarField::from_function(g, [](double x, double, double) { return std::cos(x); });
  CHECK(sup_norm(partial_derivative(f, 0) - exact) <= 1e-5);
  CHECK(sup_norm(partial_derivative(f, 1)) == 0.0);
}

TEST_CASE("stencil error ratios under refinement") {
  CHECK(derivative_error(32, 4) / derivative_error(64, 4) == doctest::Approx(16.0).epsilon(0.02));
  CHECK(derivative_error(32, 2) / derivative_error(64, 2) == doctest::Approx(4.0).epsilon(0.02));
}

TEST_CASE("curl of (sin x2, sin x3, sin x1)") {
  const Grid g(48, 4);
  const VectorField V(ScalarField::from_function(g, [](double, double y, double) { return std::sin(y); }),
                      ScalarField::from_function(g, [](double, double, double z) { return std::sin(z); }),
                      ScalarField::from_function(g, [](double x, double, double) { return std::sin(x); }));
  const VectorField expected(
      ScalarField::from_function(g, [](double, double, double z) { return -std::cos(z); }),
      ScalarField::from_function(g, [](double x, double, double) { return -std::cos(x); }),
      ScalarField::from_function(g, [](double, double y, double) { return -std::cos(y); }));
  CHECK(sup_norm(flat_curl(V) - expected) <= 1e-4);
  CHECK(sup_norm(flat_div(V)) <= 1e-14);
}

TEST_CASE("discrete curl grad and div curl vanish to roundoff") {
  for (int order : {2, 4}) {
    const Grid g(24, order);
    const ScalarField f = ScalarField::from_function(g, [](double x, double y, double z) {
      return std::exp(std::sin(x) * std::cos(2 * y)) + std::sin(x + z);
    });
    const VectorField V(f, ScalarField::from_function(g, [](double x, double y, double z) { return std::cos(x * 1 + y - z); }),
                        ScalarField::from_function(g, [](double x, double, double z) { return std::sin(3 * x) * std::cos(z); }));
    CHECK(sup_norm(flat_curl(gradient(f))) <= 1e-13);
    CHECK(sup_norm(flat_div(flat_curl(V))) <= 1e-13);
    CHECK(sup_norm(laplacian(f) - flat_div(gradient(f))) <= 1e-13);
  }
}

TEST_CASE("epsilon contraction identity") {
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n) {
          double lhs = 0.0;
          for (int i = 0; i < 3; ++i) lhs += levi_civita(i, j, k) * levi_civita(i, m, n);
          CHECK(lhs == delta(j, m) * delta(k, n) - delta(j, n) * delta(k, m));
        }
  CHECK(levi_civita(0, 1, 2) == 1);
  CHECK(levi_civita(2, 1, 0) == -1);
  CHECK(levi_civita(1, 2, 0) == 1);
}

TEST_CASE("derivative is linear") {
  const Grid g(16, 4);
  const ScalarField f = ScalarField::from_function(g, [](double x, double y, double) { return std::sin(x + 2 * y); });
  const ScalarField h = ScalarField::from_function(g, [](double, double y, double z) { return std::cos(y) * std::sin(z); });
  for (int axis = 0; axis < 3; ++axis) {
    const ScalarField lhs = partial_derivative(2.5 * f + h, axis);
    const ScalarField rhs = 2.5 * partial_derivative(f, axis) + partial_derivative(h, axis);
    CHECK(sup_norm(lhs - rhs) <= 1e-13);
  }
}

TEST_CASE("norms") {
  const Grid g(8, 2);
  const ScalarField one(g, 1.0);
  CHECK(sup_norm(one) == 1.0);
  CHECK(l2_norm(one) == doctest::Approx(std::pow(2 * std::numbers::pi, 1.5)).epsilon(1e-14));
  std::vector<double> x(1000, 0.1);
  CHECK(pairwise_sum(x) == doctest::Approx(100.0).epsilon(1e-14));
}

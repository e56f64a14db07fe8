#include <doctest.h>

#include <cmath>
#include <random>

#include "eulerform/errors.hpp"
#include "eulerform/null_structure.hpp"

using namespace eulerform;

namespace {

StateGradient random_gradient(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  StateGradient dV;
  for (int a = 0; a < 4; ++a)
    for (int q = 0; q < kUnknowns; ++q) dV(a, q) = u(rng);
  return dV;
}

}  // namespace

TEST_CASE("frame at rest with c = 1 along x1") {
  const MetricPoint m = metric_at(1.0, Vec3{0, 0, 0});
  const NullFrame f = build_null_frame(m, Vec3{1, 0, 0});
  CHECK((f.L - Eigen::Vector4d(1, 1, 0, 0)).norm() <= 1e-15);
  CHECK((f.uL - Eigen::Vector4d(1, -1, 0, 0)).norm() <= 1e-15);
  CHECK(f.e1(0) == 0.0);
  CHECK(f.e2(0) == 0.0);
  CHECK(std::abs(f.e1.dot(f.e2)) <= 1e-15);
  CHECK(frame_relation_residual(f) <= 1e-15);

  const FrameCoefficients fc = frame_coefficients(f);
  CHECK(fc.M(0, 2) == doctest::Approx(0.5));
  CHECK(fc.M(0, 3) == doctest::Approx(0.5));
  CHECK(std::abs(fc.M(0, 0)) <= 1e-15);
  CHECK(std::abs(fc.M(0, 1)) <= 1e-15);
}

TEST_CASE("frame vectors scale with c and follow the flow") {
  const double c = 2.0;
  const Vec3 v{0.3, -0.2, 0.5};
  const NullFrame f = build_null_frame(metric_at(c, v), Vec3{0, 0, 1});
  // L = B + c n and uL = B - c n with B = (1, v).
  CHECK((f.L - Eigen::Vector4d(1, 0.3, -0.2, 0.5 + c)).norm() <= 1e-14);
  CHECK((f.uL - Eigen::Vector4d(1, 0.3, -0.2, 0.5 - c)).norm() <= 1e-14);
  CHECK(f.e1.tail<3>().norm() == doctest::Approx(c));
  CHECK(f.e1(3) == doctest::Approx(0.0));
  CHECK(frame_relation_residual(f) <= 1e-12);
}

TEST_CASE("frame construction rejects non-unit directions") {
  CHECK_THROWS_AS(build_null_frame(metric_at(1.0, Vec3{}), Vec3{1, 1, 0}), UsageError);
}

TEST_CASE("the 26 cube directions are distinct unit vectors") {
  const auto dirs = cube_directions();
  REQUIRE(dirs.size() == 26);
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    CHECK(std::hypot(dirs[i][0], dirs[i][1], dirs[i][2]) == doctest::Approx(1.0).epsilon(1e-15));
    for (std::size_t j = 0; j < i; ++j) CHECK(dirs[i] != dirs[j]);
  }
}

TEST_CASE("null forms on simple arguments") {
  const MetricPoint m = metric_at(1.5, Vec3{0.4, 0.1, -0.3});
  const Eigen::Vector4d a(0.3, -1.2, 0.8, 2.0), b(1.1, 0.2, -0.4, 0.9);
  for (int al = 0; al < 4; ++al)
    for (int be = 0; be < 4; ++be) {
      CHECK(null_form_qab(al, be, a, a) == 0.0);
      CHECK(null_form_qab(al, be, a, b) == -null_form_qab(be, al, a, b));
    }
  CHECK(null_form_qg(m, a, b) == doctest::Approx(a.dot(m.g_inv * b)).epsilon(1e-14));
  // The covector g(L, .) is null for g^-1.
  const NullFrame f = build_null_frame(m, Vec3{0, 1, 0});
  const Eigen::Vector4d Lflat = m.g * f.L;
  CHECK(std::abs(null_form_qg(m, Lflat, Lflat)) <= 1e-13);
}

TEST_CASE("dyadic decomposition of the inverse metric") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 50; ++t) {
    const MetricPoint m = metric_at(1.75 + 1.25 * u(rng), Vec3{u(rng), u(rng), u(rng)});
    for (const Vec3& n : cube_directions()) {
      const NullFrame f = build_null_frame(m, n);
      CHECK((decompose_inverse_metric(f) - m.g_inv).cwiseAbs().maxCoeff() <= 1e-10);
      CHECK(frame_coefficients(f).reconstruction_error <= 1e-10);
    }
  }
}

TEST_CASE("standard null forms satisfy the strong null condition in every frame") {
  const EosModel eos = EosModel::polytropic(1.4);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  StateArray V{};
  V[0] = 0.2;
  V[1] = 0.5;
  V[2] = -0.4;
  V[3] = 0.9;
  const MetricPoint m = metric_at(eos.evaluate(V[0], V[4]), Vec3{V[1], V[2], V[3]});
  const StateGradient dV = random_gradient(rng);
  for (const Vec3& n : cube_directions()) {
    const NullFrame f = build_null_frame(m, n);
    const StrongNullReport qg = strong_null_check(qg_term(eos, 0, 1), f, V, dV);
    CHECK(qg.pass);
    CHECK(qg.expansion_error <= 1e-10);
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) CHECK(strong_null_check(qab_term(a, b, 1, 2), f, V, dV).pass);
    const StrongNullReport ctrl = strong_null_check(dt_squared_term(1), f, V, dV);
    CHECK_FALSE(ctrl.pass);
    CHECK(std::max(ctrl.diag_uLuL, ctrl.diag_LL) >= 0.1);
  }
}

TEST_CASE("quadratic forms evaluate the same in every frame") {
  const EosModel eos = EosModel::polytropic(2.0);
  std::mt19937_64 rng(5);
  StateArray V{};
  V[1] = 0.3;
  const MetricPoint m = metric_at(eos.evaluate(0.0, 0.0), Vec3{0.3, 0, 0});
  const StateGradient dV = random_gradient(rng);
  const QuadraticCoefficients f = qg_term(eos, 0, 1).coeff(V);
  CHECK(f.symmetry_defect() == 0.0);
  const double direct = evaluate_quadratic(f, dV);
  // Q^g(d rho, d v1) computed from the metric.
  const double expected = null_form_qg(m, dV.col(0), dV.col(1));
  CHECK(direct == doctest::Approx(expected).epsilon(1e-13));
}

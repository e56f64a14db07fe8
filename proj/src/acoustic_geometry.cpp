#include "eulerform/acoustic_geometry.hpp"

#include <algorithm>
#include <cmath>

#include "eulerform/errors.hpp"
#include "eulerform/parallel.hpp"

namespace eulerform {

MetricPoint metric_at(double c, const Vec3& v) {
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("metric needs a positive sound speed");
  MetricPoint m;
  m.c = c;
  m.v = v;
  const double inv_c2 = 1.0 / (c * c);
  const double v2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  m.g.setZero();
  m.g_inv.setZero();
  m.g(0, 0) = -1.0 + inv_c2 * v2;
  m.g_inv(0, 0) = -1.0;
  for (int a = 0; a < 3; ++a) {
    m.g(0, a + 1) = m.g(a + 1, 0) = -inv_c2 * v[a];
    m.g_inv(0, a + 1) = m.g_inv(a + 1, 0) = -v[a];
    for (int b = 0; b < 3; ++b) {
      m.g(a + 1, b + 1) = (a == b) ? inv_c2 : 0.0;
      m.g_inv(a + 1, b + 1) = (a == b ? c * c : 0.0) - v[a] * v[b];
    }
  }
  return m;
}

MetricPoint metric_at(const EosPoint& eos_point, const Vec3& v) {
  return metric_at(eos_point.c, v);
}

Eigen::Matrix4d inverse_metric_dyadic(const MetricPoint& point) {
  const Eigen::Vector4d B(1.0, point.v[0], point.v[1], point.v[2]);
  Eigen::Matrix4d out = -B * B.transpose();
  for (int a = 1; a < 4; ++a) out(a, a) += point.c * point.c;
  return out;
}

TransportVectorReport check_transport_vector(const MetricPoint& point) {
  const Eigen::Vector4d B(1.0, point.v[0], point.v[1], point.v[2]);
  TransportVectorReport r;
  r.g_BB = B.dot(point.g * B);
  r.max_error = std::abs(r.g_BB + 1.0);
  for (int i = 0; i < 3; ++i) {
    r.g_B_partial[i] = (point.g * B)(i + 1);
    r.max_error = std::max(r.max_error, std::abs(r.g_B_partial[i]));
  }
  r.future_directed = B(0) > 0.0;
  return r;
}

MetricInvariants metric_invariants(const MetricPoint& point) {
  MetricInvariants inv;
  inv.inverse_error =
      (point.g_inv * point.g - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff();
  inv.det_error = std::abs(point.g.determinant() + std::pow(point.c, -6));
  inv.transport_error = check_transport_vector(point).max_error;
  return inv;
}

namespace {

void require_slices(const SliceStack& stack, std::span<const ScalarField> f, std::size_t min) {
  stack.validate();
  if (stack.slices.size() < min) throw UsageError("not enough slices for the wave operator");
  if (f.size() != stack.slices.size()) throw UsageError("per-slice field count mismatch");
}

}  // namespace

ScalarField box_g(const SliceStack& stack, std::span<const ScalarField> f) {
  require_slices(stack, f, 5);
  const FluidState& mid = stack.middle();
  const std::size_t m = mid.grid().size();
  const auto rho_slices = slice_rho(stack);
  const auto s_slices = slice_s(stack);

  const ScalarField BBf = material_derivative_twice(stack, f);
  const ScalarField Bf = material_derivative(stack, f);
  const ScalarField Brho = material_derivative(stack, rho_slices);
  const ScalarField Bs = material_derivative(stack, s_slices);
  const ScalarField& f0 = f[f.size() / 2];
  const ScalarField lap = laplacian(f0);
  const VectorField grad_f = gradient(f0);
  const VectorField grad_rho = gradient(mid.rho_log);
  const VectorField grad_s = gradient(mid.s);
  const ScalarField div_v = flat_div(mid.v);

  ScalarField out(mid.grid());
  parallel_for(m, [&](std::size_t q) {
    const EosPoint e = mid.eos.evaluate(mid.rho_log[q], mid.s[q]);
    const double c = e.c;
    double drho_df = 0.0, S_df = 0.0;
    for (int a = 0; a < 3; ++a) {
      drho_df += grad_rho[a][q] * grad_f[a][q];
      S_df += grad_s[a][q] * grad_f[a][q];
    }
    const double ginv_rho_f = -Brho[q] * Bf[q] + c * c * drho_df;
    out[q] = -BBf[q] + c * c * lap[q] + 2.0 * e.c_rho / c * Brho[q] * Bf[q] -
             div_v[q] * Bf[q] - e.c_rho / c * ginv_rho_f - c * e.c_s * S_df +
             3.0 * e.c_s / c * Bs[q] * Bf[q];
  });
  return out;
}

ScalarField box_g_divergence_form(const SliceStack& stack, std::span<const ScalarField> f) {
  require_slices(stack, f, 9);
  const std::size_t count = stack.slices.size();
  const std::size_t mid_idx = count / 2;
  const Grid& grid = stack.middle().grid();
  const std::size_t m = grid.size();

  // Flux time component F^0 = -c^-3 (d_t f + v.grad f) on the five central
  // slices; each needs a centred d_t f from its own five neighbours.
  std::vector<ScalarField> flux_t;
  for (std::size_t k = mid_idx - 2; k <= mid_idx + 2; ++k) {
    const ScalarField ft = time_derivative(f.subspan(k - 2, 5), stack.dt);
    const FluidState& sl = stack.slices[k];
    const VectorField gf = gradient(f[k]);
    ScalarField F0(grid);
    for (std::size_t q = 0; q < m; ++q) {
      const double c = sl.eos.sound_speed(sl.rho_log[q], sl.s[q]);
      double Bf = ft[q];
      for (int a = 0; a < 3; ++a) Bf += sl.v[a][q] * gf[a][q];
      F0[q] = -Bf / (c * c * c);
    }
    flux_t.push_back(std::move(F0));
  }
  ScalarField out = time_derivative(flux_t, stack.dt);

  // Spatial fluxes F^a = c^-3 (-v^a d_t f + (c^2 delta^ab - v^a v^b) d_b f) at the middle slice.
  const FluidState& mid = stack.middle();
  const ScalarField ft = time_derivative(f.subspan(mid_idx - 2, 5), stack.dt);
  const VectorField gf = gradient(f[mid_idx]);
  VectorField flux(grid);
  ScalarField inv_c3(grid);
  for (std::size_t q = 0; q < m; ++q) {
    const double c = mid.eos.sound_speed(mid.rho_log[q], mid.s[q]);
    const double w = 1.0 / (c * c * c);
    inv_c3[q] = w;
    double v_df = 0.0;
    for (int b = 0; b < 3; ++b) v_df += mid.v[b][q] * gf[b][q];
    for (int a = 0; a < 3; ++a) {
      flux[a][q] = w * (-mid.v[a][q] * ft[q] + c * c * gf[a][q] - mid.v[a][q] * v_df);
    }
  }
  out += flat_div(flux);
  for (std::size_t q = 0; q < m; ++q) out[q] /= inv_c3[q];
  return out;
}

}  // namespace eulerform

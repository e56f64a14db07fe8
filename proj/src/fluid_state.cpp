#include "eulerform/fluid_state.hpp"

#include <cmath>

#include "eulerform/errors.hpp"
#include "eulerform/parallel.hpp"

namespace eulerform {

DerivedState compute_derived(const FluidState& state) {
  const Grid& g = state.grid();
  const std::size_t m = g.size();
  const double rho_bar = state.eos.background_density();

  DerivedState d;
  d.omega = flat_curl(state.v);
  for (int a = 0; a < 3; ++a) {
    for (std::size_t q = 0; q < m; ++q) d.omega[a][q] *= std::exp(-state.rho_log[q]);
  }
  d.grad_ent = gradient(state.s);

  const VectorField curl_omega = flat_curl(d.omega);
  const ScalarField div_v = flat_div(state.v);
  const VectorField grad_rho = gradient(state.rho_log);
  std::array<VectorField, 3> grad_v = {gradient(state.v[0]), gradient(state.v[1]),
                                       gradient(state.v[2])};
  const ScalarField div_S = flat_div(d.grad_ent);

  d.curl_mod = VectorField(g);
  d.div_mod = ScalarField(g);
  parallel_for(m, [&](std::size_t q) {
    const double rho = state.rho_log[q];
    const EosPoint e = state.eos.evaluate(rho, state.s[q]);
    const double coupling = std::exp(-3.0 * rho) / (e.c * e.c) * (e.p_s / rho_bar);
    double S[3];
    for (int a = 0; a < 3; ++a) S[a] = d.grad_ent[a][q];
    for (int i = 0; i < 3; ++i) {
      double S_dv = 0.0;
      for (int a = 0; a < 3; ++a) S_dv += S[a] * grad_v[i][a][q];
      d.curl_mod[i][q] = std::exp(-rho) * curl_omega[i][q] + coupling * S_dv -
                         coupling * div_v[q] * S[i];
    }
    double S_drho = 0.0;
    for (int a = 0; a < 3; ++a) S_drho += S[a] * grad_rho[a][q];
    d.div_mod[q] = std::exp(-2.0 * rho) * div_S[q] - std::exp(-2.0 * rho) * S_drho;
  });
  return d;
}

void SliceStack::validate() const {
  if (slices.size() < 5 || slices.size() % 2 == 0) {
    throw UsageError("slice stack needs an odd number (>= 5) of slices");
  }
  if (!(dt > 0.0)) throw UsageError("slice stack dt must be positive");
  for (const auto& s : slices) {
    if (!(s.grid() == slices.front().grid())) throw UsageError("slices on different grids");
  }
}

namespace {

void require_five(std::span<const ScalarField> f) {
  if (f.size() < 5 || f.size() % 2 == 0) {
    throw UsageError("time differencing needs an odd number (>= 5) of slices");
  }
}

}  // namespace

ScalarField time_derivative(std::span<const ScalarField> f, double dt) {
  require_five(f);
  const std::size_t c = f.size() / 2;
  const auto& m2 = f[c - 2];
  const auto& m1 = f[c - 1];
  const auto& p1 = f[c + 1];
  const auto& p2 = f[c + 2];
  ScalarField out(f[c].grid());
  const double w = 1.0 / (12.0 * dt);
#pragma omp parallel for schedule(static)
  for (std::size_t q = 0; q < out.size(); ++q) {
    out[q] = w * (m2[q] - 8.0 * m1[q] + 8.0 * p1[q] - p2[q]);
  }
  return out;
}

ScalarField second_time_derivative(std::span<const ScalarField> f, double dt) {
  require_five(f);
  const std::size_t c = f.size() / 2;
  const auto& m2 = f[c - 2];
  const auto& m1 = f[c - 1];
  const auto& z = f[c];
  const auto& p1 = f[c + 1];
  const auto& p2 = f[c + 2];
  ScalarField out(z.grid());
  const double w = 1.0 / (12.0 * dt * dt);
#pragma omp parallel for schedule(static)
  for (std::size_t q = 0; q < out.size(); ++q) {
    out[q] = w * (-m2[q] + 16.0 * m1[q] - 30.0 * z[q] + 16.0 * p1[q] - p2[q]);
  }
  return out;
}

namespace {

// v^a d_a f at the middle slice.
ScalarField advect(const VectorField& v, const ScalarField& f) {
  ScalarField out(f.grid());
  for (int a = 0; a < 3; ++a) {
    const ScalarField df = partial_derivative(f, a);
    for (std::size_t q = 0; q < out.size(); ++q) out[q] += v[a][q] * df[q];
  }
  return out;
}

}  // namespace

ScalarField material_derivative(const SliceStack& stack, std::span<const ScalarField> f) {
  stack.validate();
  if (f.size() != stack.slices.size()) throw UsageError("per-slice field count mismatch");
  ScalarField out = time_derivative(f, stack.dt);
  out += advect(stack.middle().v, f[f.size() / 2]);
  return out;
}

ScalarField material_derivative_twice(const SliceStack& stack,
                                      std::span<const ScalarField> f) {
  stack.validate();
  if (f.size() != stack.slices.size()) throw UsageError("per-slice field count mismatch");
  const VectorField& v = stack.middle().v;
  const ScalarField& f0 = f[f.size() / 2];

  ScalarField out = second_time_derivative(f, stack.dt);
  const ScalarField ft = time_derivative(f, stack.dt);
  out += 2.0 * advect(v, ft);
  for (int a = 0; a < 3; ++a) {
    const auto va = slice_v(stack, a);
    const ScalarField vt = time_derivative(va, stack.dt);
    const ScalarField df = partial_derivative(f0, a);
    for (std::size_t q = 0; q < out.size(); ++q) out[q] += vt[q] * df[q];
  }
  out += advect(v, advect(v, f0));
  return out;
}

std::vector<ScalarField> slice_rho(const SliceStack& stack) {
  std::vector<ScalarField> out;
  out.reserve(stack.slices.size());
  for (const auto& s : stack.slices) out.push_back(s.rho_log);
  return out;
}

std::vector<ScalarField> slice_s(const SliceStack& stack) {
  std::vector<ScalarField> out;
  out.reserve(stack.slices.size());
  for (const auto& s : stack.slices) out.push_back(s.s);
  return out;
}

std::vector<ScalarField> slice_v(const SliceStack& stack, int component) {
  std::vector<ScalarField> out;
  out.reserve(stack.slices.size());
  for (const auto& s : stack.slices) out.push_back(s.v[component]);
  return out;
}

}  // namespace eulerform

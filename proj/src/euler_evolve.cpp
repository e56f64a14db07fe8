#include "eulerform/euler_evolve.hpp"

#include <algorithm>
#include <cmath>

#include "eulerform/errors.hpp"
#include "eulerform/parallel.hpp"

namespace eulerform {

EulerRhs euler_rhs(const FluidState& state) {
  const Grid& g = state.grid();
  const std::size_t m = g.size();
  const double rho_bar = state.eos.background_density();

  const VectorField grad_rho = gradient(state.rho_log);
  const VectorField grad_s = gradient(state.s);
  const std::array<VectorField, 3> grad_v = {gradient(state.v[0]), gradient(state.v[1]),
                                             gradient(state.v[2])};

  EulerRhs out{ScalarField(g), VectorField(g), ScalarField(g)};
  parallel_for(m, [&](std::size_t q) {
    const double v[3] = {state.v[0][q], state.v[1][q], state.v[2][q]};
    const EosPoint e = state.eos.evaluate(state.rho_log[q], state.s[q]);
    const double c2 = e.c * e.c;
    const double ent_force = std::exp(-state.rho_log[q]) * e.p_s / rho_bar;

    double adv_rho = 0.0, adv_s = 0.0, div_v = 0.0;
    for (int a = 0; a < 3; ++a) {
      adv_rho += v[a] * grad_rho[a][q];
      adv_s += v[a] * grad_s[a][q];
      div_v += grad_v[a][a][q];
    }
    out.d_rho[q] = -adv_rho - div_v;
    out.d_s[q] = -adv_s;
    for (int i = 0; i < 3; ++i) {
      double adv_vi = 0.0;
      for (int a = 0; a < 3; ++a) adv_vi += v[a] * grad_v[i][a][q];
      out.d_v[i][q] = -adv_vi - c2 * grad_rho[i][q] - ent_force * grad_s[i][q];
    }
  });
  return out;
}

double max_signal_speed(const FluidState& state) {
  double best = 0.0;
  for (std::size_t q = 0; q < state.rho_log.size(); ++q) {
    const double speed = std::hypot(state.v[0][q], state.v[1][q], state.v[2][q]) +
                         state.eos.sound_speed(state.rho_log[q], state.s[q]);
    best = std::max(best, speed);
  }
  return best;
}

namespace {

FluidState advance(const FluidState& base, double h, const EulerRhs& k) {
  FluidState out = base;
  out.rho_log = axpy(base.rho_log, h, k.d_rho);
  out.v = axpy(base.v, h, k.d_v);
  out.s = axpy(base.s, h, k.d_s);
  return out;
}

EulerRhs stage(const FluidState& s) {
  try {
    return euler_rhs(s);
  } catch (const DomainError& e) {
    throw BlowupError(std::string("evolution left the EOS domain: ") + e.what());
  }
}

}  // namespace

void apply_filter(ScalarField& f, double strength) {
  if (strength == 0.0) return;
  const Grid& g = f.grid();
  const int n = g.n;
  static constexpr double binom[9] = {1, -8, 28, -56, 70, -56, 28, -8, 1};
  const double w = strength / 256.0;
  for (int axis = 0; axis < 3; ++axis) {
    const ScalarField src = f;
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          double d8 = 0.0;
          for (int o = -4; o <= 4; ++o) {
            int idx[3] = {i, j, k};
            idx[axis] = ((idx[axis] + o) % n + n) % n;
            d8 += binom[o + 4] * src.at(idx[0], idx[1], idx[2]);
          }
          f.at(i, j, k) -= w * d8;
        }
      }
    }
  }
}

FluidState rk4_step(const FluidState& state, double dt, const EvolveOptions& opts) {
  const EulerRhs k1 = stage(state);
  const EulerRhs k2 = stage(advance(state, 0.5 * dt, k1));
  const EulerRhs k3 = stage(advance(state, 0.5 * dt, k2));
  const EulerRhs k4 = stage(advance(state, dt, k3));

  FluidState out = state;
  const std::size_t m = state.grid().size();
  const double w = dt / 6.0;
#pragma omp parallel for schedule(static)
  for (std::size_t q = 0; q < m; ++q) {
    out.rho_log[q] += w * (k1.d_rho[q] + 2.0 * k2.d_rho[q] + 2.0 * k3.d_rho[q] + k4.d_rho[q]);
    out.s[q] += w * (k1.d_s[q] + 2.0 * k2.d_s[q] + 2.0 * k3.d_s[q] + k4.d_s[q]);
    for (int a = 0; a < 3; ++a) {
      out.v[a][q] +=
          w * (k1.d_v[a][q] + 2.0 * k2.d_v[a][q] + 2.0 * k3.d_v[a][q] + k4.d_v[a][q]);
    }
  }
  out.time = state.time + dt;
  if (opts.filter) {
    apply_filter(out.rho_log, opts.filter_strength);
    apply_filter(out.s, opts.filter_strength);
    for (int a = 0; a < 3; ++a) apply_filter(out.v[a], opts.filter_strength);
  }
  if (!out.all_finite()) {
    throw BlowupError("non-finite values after step to t = " + std::to_string(out.time));
  }
  return out;
}

FluidState evolve_to(FluidState state, double t_target, double dt, const EvolveOptions& opts) {
  if (!(dt > 0.0)) throw UsageError("evolve_to requires dt > 0");
  const double remaining = t_target - state.time;
  if (remaining < -1e-14 * std::max(1.0, std::abs(t_target))) {
    throw UsageError("evolve_to cannot step backwards");
  }
  if (remaining <= 0.0) return state;
  const long steps = static_cast<long>(std::ceil(remaining / dt - 1e-9));
  const double first = remaining - static_cast<double>(steps - 1) * dt;
  state = rk4_step(state, first, opts);
  for (long k = 1; k < steps; ++k) state = rk4_step(state, dt, opts);
  // Pin the clock to the target so slice timestamps are exact multiples.
  state.time = t_target;
  return state;
}

SliceStack build_slice_stack(const FluidState& initial, double t_center, double dt, int count,
                             const EvolveOptions& opts) {
  if (count < 5 || count % 2 == 0) throw UsageError("slice count must be odd and >= 5");
  if (!(dt > 0.0)) throw UsageError("slice spacing must be positive");
  const int half = count / 2;
  const double t_first = t_center - half * dt;
  if (t_first < initial.time - 1e-14) {
    throw UsageError("t_center must be at least (count/2)*dt after the initial time");
  }
  SliceStack stack;
  stack.dt = dt;
  FluidState cur = evolve_to(initial, t_first, dt, opts);
  stack.slices.push_back(cur);
  for (int k = 1; k < count; ++k) {
    cur = rk4_step(cur, dt, opts);
    cur.time = t_first + k * dt;
    stack.slices.push_back(cur);
  }
  return stack;
}

InitialDataSet complete_initial_data(const FluidState& fundamental) {
  const EulerRhs r = euler_rhs(fundamental);
  DerivedState d = compute_derived(fundamental);
  return InitialDataSet{fundamental, r.d_rho, r.d_v, r.d_s, std::move(d.omega),
                        std::move(d.grad_ent)};
}

}  // namespace eulerform

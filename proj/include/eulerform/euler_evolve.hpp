#pragma once

#include "eulerform/fluid_state.hpp"

namespace eulerform {

/// Time derivatives of the fundamental unknowns.
struct EulerRhs {
  ScalarField d_rho;
  VectorField d_v;
  ScalarField d_s;
};

/// d_t fields of the first-order system with B = d_t + v.grad expanded:
///   d_t rho = -v.grad rho - div v
///   d_t v^i = -v.grad v^i - c^2 d_i rho - exp(-rho) (p_s / rho_bar) d_i s
///   d_t s   = -v.grad s
EulerRhs euler_rhs(const FluidState& state);

struct EvolveOptions {
  /// Eighth-order dissipative filter applied after every step. Off by default;
  /// meant only for long runs, never for residual checks.
  bool filter = false;
  double filter_strength = 0.0;  // in [0, 1]
};

/// Largest |v| + c over the grid.
double max_signal_speed(const FluidState& state);

/// Classical four-stage Runge-Kutta step. Throws BlowupError if the result
/// contains non-finite values or leaves the EOS domain.
FluidState rk4_step(const FluidState& state, double dt, const EvolveOptions& opts = {});

/// Steps from state.time to exactly t_target (the first step absorbs the
/// remainder so the remaining steps have size dt).
FluidState evolve_to(FluidState state, double t_target, double dt,
                     const EvolveOptions& opts = {});

/// Evolves to t_center - (count/2)*dt and records `count` consecutive slices
/// spaced by dt. count must be odd and >= 5.
SliceStack build_slice_stack(const FluidState& initial, double t_center, double dt,
                             int count = 5, const EvolveOptions& opts = {});

/// Fundamental data together with the quantities obtained from it by
/// differentiation.
struct InitialDataSet {
  FluidState fundamental;
  ScalarField dt_rho;
  VectorField dt_v;
  ScalarField dt_s;
  VectorField omega;
  VectorField grad_ent;
};

InitialDataSet complete_initial_data(const FluidState& fundamental);

/// One application of the eighth-order filter along every axis:
///   f <- f - strength * 2^-8 * delta^8 f.
void apply_filter(ScalarField& f, double strength);

}  // namespace eulerform

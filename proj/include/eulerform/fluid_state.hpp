#pragma once

#include <span>
#include <vector>

#include "eulerform/eos.hpp"
#include "eulerform/grid.hpp"

namespace eulerform {

/// One time slice of (rho_log, v, s) with its equation of state.
struct FluidState {
  ScalarField rho_log;
  VectorField v;
  ScalarField s;
  EosModel eos = EosModel::polytropic(1.4);
  double time = 0.0;

  const Grid& grid() const { return rho_log.grid(); }
  bool all_finite() const { return rho_log.all_finite() && v.all_finite() && s.all_finite(); }
};

/// Specific vorticity, entropy gradient and the modified fluid variables.
struct DerivedState {
  VectorField omega;     // exp(-rho) curl v
  VectorField grad_ent;  // S = grad s
  VectorField curl_mod;  // C
  ScalarField div_mod;   // D
};

DerivedState compute_derived(const FluidState& state);

/// Slices at uniform spacing dt, odd count >= 5, centred on `middle()`.
struct SliceStack {
  std::vector<FluidState> slices;
  double dt = 0.0;

  std::size_t middle_index() const { return slices.size() / 2; }
  const FluidState& middle() const { return slices[middle_index()]; }
  double t_center() const { return middle().time; }
  /// Throws UsageError unless the stack is usable for centred differencing.
  void validate() const;
};

/// Fourth-order central first derivative in time at the middle slice,
/// from the five slices nearest the middle.
ScalarField time_derivative(std::span<const ScalarField> per_slice, double dt);
/// Fourth-order central second derivative in time at the middle slice.
ScalarField second_time_derivative(std::span<const ScalarField> per_slice, double dt);

/// B f = d_t f + v^a d_a f at the middle slice of the stack.
ScalarField material_derivative(const SliceStack& stack, std::span<const ScalarField> f);

/// B B f at the middle slice, expanded as
///   d_t^2 f + (d_t v^a) d_a f + 2 v^a d_a (d_t f) + v^b d_b (v^a d_a f),
/// which keeps fourth-order accuracy in time with a five-slice stack.
ScalarField material_derivative_twice(const SliceStack& stack,
                                      std::span<const ScalarField> f);

/// Helpers that pull one field out of every slice.
std::vector<ScalarField> slice_rho(const SliceStack& stack);
std::vector<ScalarField> slice_s(const SliceStack& stack);
std::vector<ScalarField> slice_v(const SliceStack& stack, int component);

}  // namespace eulerform

#pragma once

#include <vector>

#include "eulerform/cell_jet.hpp"
#include "eulerform/term_catalog.hpp"

namespace eulerform {

/// The null-form and lower-order source groups on the middle slice.
struct SourceTerms {
  VectorField q_v;
  ScalarField q_rho;
  VectorField q_C;
  ScalarField q_D;
  VectorField l_v;
  ScalarField l_rho;
  VectorField l_omega;
  VectorField l_S;
  ScalarField l_divomega;
  VectorField l_C;
};

/// `state` and `derived` must describe the stack's middle slice; material
/// derivatives inside the sources come from the stack. Throws UsageError on
/// a grid or time mismatch.
SourceTerms source_terms(const FluidState& state, const DerivedState& derived,
                         const SliceStack& stack);

struct WaveResiduals {
  VectorField res_v;
  ScalarField res_rho;
};
struct TransportResiduals {
  VectorField res_omega;
  ScalarField res_s;
  VectorField res_S;
};
struct DivCurlResiduals {
  ScalarField res_divomega;
  VectorField res_C;
  ScalarField res_D;
  VectorField res_curlS;
};

/// LHS - RHS of every equation at the middle slice. Material derivatives on
/// either side are always taken from the stack, never substituted.
struct SystemResiduals {
  WaveResiduals wave;
  TransportResiduals transport;
  DivCurlResiduals divcurl;

  /// Components of one equation's residual (1 or 3 fields).
  std::vector<const ScalarField*> components(Equation eq) const;
};

SystemResiduals system_residuals(const SliceStack& stack);
WaveResiduals wave_residuals(const SliceStack& stack);
TransportResiduals transport_residuals(const SliceStack& stack);
DivCurlResiduals divcurl_residuals(const SliceStack& stack);

}  // namespace eulerform

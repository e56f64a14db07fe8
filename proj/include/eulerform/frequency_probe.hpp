#pragma once

#include "eulerform/term_catalog.hpp"

namespace eulerform {

enum class ProbeVariable { velocity, density };

struct ProbeOptions {
  ProbeVariable variable = ProbeVariable::velocity;
  int component = 0;  // velocity component that is perturbed
  /// Adds exp(-rho) d_1 d_1 v^1 to the right-hand side; the measured exponent
  /// should then be close to 2.
  bool inject_second_derivative = false;
};

struct ProbeResult {
  double response_k = 0.0;
  double response_2k = 0.0;
  double exponent = 0.0;  // log2(response_2k / response_k); NaN if both vanish
  bool independent = false;  // both responses are exactly zero
};

/// Perturbs v^component (or rho) by eps sin(k x^1), keeps Omega and S at their
/// base values, substitutes every material derivative by the first-order
/// equations, and measures the sup-norm change of the equation's right-hand
/// side at wavenumbers k and 2k. Throws UsageError unless 1 <= k <= n/8.
ProbeResult frequency_scaling_probe(Equation eq, const FluidState& base, int k, double eps,
                                    const ProbeOptions& opts = {});

}  // namespace eulerform

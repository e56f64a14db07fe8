#include "eulerform/frequency_probe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eulerform/errors.hpp"
#include "eulerform/parallel.hpp"

namespace eulerform {

namespace {

// Right-hand side of `eq` at every cell, flattened component-major.
std::vector<double> rhs_field(Equation eq, const FluidState& state, const DerivedState& fixed,
                              bool inject) {
  const SliceJets jets(state, fixed);
  const std::size_t m = jets.size();
  const int comps = equation_components(eq);
  ScalarField control(state.grid());
  if (inject) control = partial_derivative(partial_derivative(state.v[0], 0), 0);

  std::vector<double> out(m * comps);
  parallel_for(m, [&](std::size_t q) {
    const CellJet j = jets.at(q);
    const Vec3 r = equation_rhs(eq, j);
    for (int i = 0; i < comps; ++i) out[i * m + q] = r[i];
    if (inject) out[q] += std::exp(-j.rho()) * control[q];
  });
  return out;
}

FluidState perturbed(const FluidState& base, int k, double eps, const ProbeOptions& opts) {
  FluidState pert = base;
  const ScalarField wave =
      ScalarField::from_function(base.grid(), [&](double x, double, double) { return eps * std::sin(k * x); });
  if (opts.variable == ProbeVariable::velocity) {
    pert.v[opts.component] += wave;
  } else {
    pert.rho_log += wave;
  }
  return pert;
}

// Sup norm of the linear response, (rhs(+eps) - rhs(-eps)) / 2. The symmetric
// difference removes the O(eps^2) part, which otherwise dominates wherever the
// linear response happens to vanish at the base state.
double response(Equation eq, const FluidState& base, const DerivedState& fixed, int k,
                double eps, const ProbeOptions& opts) {
  const bool inject = opts.inject_second_derivative;
  const std::vector<double> up = rhs_field(eq, perturbed(base, k, eps, opts), fixed, inject);
  const std::vector<double> down = rhs_field(eq, perturbed(base, k, -eps, opts), fixed, inject);
  double worst = 0.0;
  for (std::size_t q = 0; q < up.size(); ++q) worst = std::max(worst, 0.5 * std::abs(up[q] - down[q]));
  return worst;
}

}  // namespace

ProbeResult frequency_scaling_probe(Equation eq, const FluidState& base, int k, double eps,
                                    const ProbeOptions& opts) {
  if (k < 1 || 8 * k > base.grid().n) throw UsageError("probe wavenumber must satisfy 1 <= k <= n/8");
  if (opts.component < 0 || opts.component > 2) throw UsageError("probe component must be 0, 1 or 2");
  const DerivedState fixed = compute_derived(base);

  ProbeResult r;
  r.response_k = response(eq, base, fixed, k, eps, opts);
  r.response_2k = response(eq, base, fixed, 2 * k, eps, opts);
  r.independent = r.response_k == 0.0 && r.response_2k == 0.0;
  r.exponent = r.independent ? std::numeric_limits<double>::quiet_NaN()
                             : std::log2(r.response_2k / r.response_k);
  return r;
}

}  // namespace eulerform

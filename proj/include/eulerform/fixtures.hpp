#pragma once

#include <string>
#include <string_view>

#include "eulerform/fluid_state.hpp"

namespace eulerform {

/// rho = a sin x1 cos x2, v = b (sin x2, sin x3, sin x1), s = d cos x1.
FluidState smooth_fixture(const Grid& grid, const EosModel& eos, double a = 0.05,
                          double b = 0.05, double d = 0.05);

/// Uniform state (0.1, (0.2, -0.1, 0.05), 0.3).
FluidState constant_fixture(const Grid& grid, const EosModel& eos);

/// Simple plane wave with R_+ = amplitude sin x1, R_- = 0 and s = 0, at t = 0.
FluidState plane_wave_fixture(const Grid& grid, const EosModel& eos, double amplitude = 0.5);

/// v = grad phi with phi = b (sin x1 cos x2 + cos x3), nonconstant rho and
/// constant s.
FluidState irrotational_fixture(const Grid& grid, const EosModel& eos, double b = 0.05);

/// Dispatch by name: smooth-default, constant, plane-wave, irrotational.
/// Throws ConfigError for other names.
FluidState make_fixture(std::string_view name, const Grid& grid, const EosModel& eos);

bool known_fixture(std::string_view name);

}  // namespace eulerform

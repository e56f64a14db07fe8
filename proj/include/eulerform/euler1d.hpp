#pragma once

#include <vector>

#include "eulerform/shock1d.hpp"

namespace eulerform {

/// Plane-symmetric isentropic Euler on the periodic interval [0, 2*pi):
///   d_t rho = -v d_x rho - d_x v
///   d_t v   = -v d_x v - c^2 d_x rho
/// Fourth-order central differences in space, RK4 in time.
struct Euler1dState {
  std::vector<double> rho_log;
  std::vector<double> v;
  double time = 0.0;

  int n() const { return static_cast<int>(v.size()); }
  double spacing() const;
};

/// Samples the fan's initial data (R_- = 0) on n points.
Euler1dState euler1d_initial(const CharacteristicFan& fan, int n);

/// Periodic fourth-order first derivative.
std::vector<double> periodic_derivative(const std::vector<double>& f, double h);

/// One RK4 step. Throws BlowupError on non-finite values.
Euler1dState euler1d_step(const Euler1dState& state, const RiemannMap& map, double dt);

/// R_+ = v + F(rho) per point.
std::vector<double> r_plus_samples(const Euler1dState& state, const RiemannMap& map);

/// Cubic Lagrange interpolation of periodic samples at x.
double periodic_interpolate(const std::vector<double>& f, double h, double x);

struct Euler1dOptions {
  int n = 1024;
  double cfl = 0.25;
  /// Linear fit of 1/max|d_x R_+| uses samples where it lies between these
  /// fractions of its initial value.
  double fit_upper = 0.60;
  double fit_lower = 0.15;
  /// Riccati comparison up to this fraction of the predicted T*.
  double riccati_until = 0.9;
  /// Compare against the exact simple wave at this fraction of T*.
  double compare_at = 0.5;
  /// Run horizon for non-compressive data (no finite T*).
  double horizon = 10.0;
};

struct Euler1dStudy {
  std::vector<double> times;
  std::vector<double> max_abs_dRplus;
  /// T* extrapolated from the linear fit of 1/max|d_x R_+|; infinite when no
  /// sample enters the fit window.
  double fitted_blowup_time = 0.0;
  double fit_r_squared = 0.0;
  /// max over t of |d_x R_+(t, x(t)) / riccati(t) - 1| along the worst
  /// characteristic.
  double riccati_max_rel_error = 0.0;
  /// sup |R_+^pde - R_+^exact| and sup |rho^pde - rho^exact| at compare_at*T*.
  double sup_error_vs_exact = 0.0;
  /// (max - min) / min of max|d_x R_+| over the run.
  double gradient_variation = 0.0;
  double final_time = 0.0;
};

/// Evolves the fan's initial data. For compressive data the run stops when
/// 1/max|d_x R_+| falls below fit_lower of its initial value; otherwise it
/// runs to opts.horizon.
Euler1dStudy euler1d_blowup_study(const CharacteristicFan& fan, const Euler1dOptions& opts = {});

}  // namespace eulerform

#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "eulerform/eos.hpp"
#include "eulerform/fluid_state.hpp"

namespace eulerform {

/// F(rho) = integral_0^rho c(r, s) dr at fixed entropy, and its inverse.
class RiemannMap {
 public:
  explicit RiemannMap(EosModel eos, double entropy = 0.0);

  /// Adaptive Gauss-Kronrod quadrature with relative tolerance 1e-12.
  double F(double rho_log) const;
  /// Newton iteration with F' = c inside an expanding bracket. Throws
  /// DomainError when y is outside the range of F.
  double F_inverse(double y) const;

  double sound_speed(double rho_log) const;
  /// d(v^1 + c)/dR_+ along a simple wave: 1/2 + c_rho / (2c).
  double dlambda_dR(double rho_log) const;

  /// (R_+, R_-) = (v^1 + F(rho), v^1 - F(rho)).
  std::pair<double, double> riemann_invariants(double v1, double rho_log) const;
  /// (v^1, rho) from (R_+, R_-).
  std::pair<double, double> invert(double r_plus, double r_minus) const;

  const EosModel& eos() const { return eos_; }
  double entropy() const { return entropy_; }

 private:
  EosModel eos_;
  double entropy_;
};

/// Initial R_+ profile and its derivative, 2*pi-periodic.
struct Profile {
  std::function<double(double)> value;
  std::function<double(double)> derivative;
};

Profile sinusoidal_profile(double amplitude);
Profile constant_profile(double value);

/// Simple wave (R_- = 0) represented by its straight characteristics
/// x = x0 + lambda(x0) t.
class CharacteristicFan {
 public:
  /// `search_points` foot points sample lambda' for the blowup search.
  CharacteristicFan(RiemannMap map, Profile profile, int search_points = 4096);

  const RiemannMap& map() const { return map_; }
  const Profile& profile() const { return profile_; }

  double R_initial(double x0) const { return profile_.value(x0); }
  double rho_initial(double x0) const;
  double c_initial(double x0) const;
  double lambda(double x0) const;
  /// Closed form d lambda / d x0 = (d lambda / dR) R'(x0).
  double dlambda(double x0) const;
  /// Five-point central difference of lambda with step h.
  double dlambda_stencil(double x0, double h) const;

  /// T* = -1 / min lambda'; infinity when min lambda' >= -1e-9.
  double valid_until() const { return t_star_; }
  double worst_foot_point() const { return worst_x0_; }
  double min_dlambda() const { return min_dlambda_; }

  /// Cached samples on the uniform foot-point grid.
  const std::vector<double>& foot_points() const { return x0_; }
  const std::vector<double>& lambda_samples() const { return lambda_; }
  const std::vector<double>& dlambda_samples() const { return dlambda_; }
  const std::vector<double>& c_samples() const { return c_; }

 private:
  RiemannMap map_;
  Profile profile_;
  std::vector<double> x0_, lambda_, dlambda_, c_;
  double lambda_min_ = 0.0, lambda_max_ = 0.0;
  double t_star_ = 0.0, worst_x0_ = 0.0, min_dlambda_ = 0.0;

  friend double solve_foot_point(const CharacteristicFan&, double, double);
};

/// Foot point x0 with x0 + lambda(x0) t = x. Throws BlowupError if t >= T*.
double solve_foot_point(const CharacteristicFan& fan, double t, double x);

struct SimpleWaveSample {
  double R_plus = 0.0;
  double v1 = 0.0;
  double rho_log = 0.0;
  double x0 = 0.0;
};

SimpleWaveSample simple_wave_solution(const CharacteristicFan& fan, double t, double x);

/// Blowup time T* of the fan (the cached minimum of -1/lambda').
double blowup_time(const CharacteristicFan& fan);

/// Earliest crossing of neighbouring characteristics on `samples` uniformly
/// spaced foot points: min over k of (x_{k+1} - x_k) / (lambda_k - lambda_{k+1}).
double crossing_time_bruteforce(const CharacteristicFan& fan, int samples);

struct EikonalSample {
  double u = 0.0;
  double mu = 0.0;
  double c_mu = 0.0;  // c * mu, which is 1 at t = 0
  double x0 = 0.0;
};

/// u = 1 - x0(t, x) and mu = (1 + t lambda'(x0)) / c(x0).
EikonalSample eikonal_mu(const CharacteristicFan& fan, double t, double x);

/// mu from its definition -1 / (g^-1)(dt, du) with d_t u and d_x u taken by
/// central differences of the traced u at step h.
double mu_by_differencing(const CharacteristicFan& fan, double t, double x, double h);

/// min over x of min(1, mu(t, x)).
double mu_star(const CharacteristicFan& fan, double t);
/// max over x of |d_x v^1(t, x)|.
double max_abs_dxv1(const CharacteristicFan& fan, double t);
/// sup over x of mu |d_x v^1|.
double blowup_product_check(const CharacteristicFan& fan, double t);

/// Plane wave at time t on a 3D grid: rho and v^1 depend on x^1 only,
/// v^2 = v^3 = 0 and s is the map's constant entropy.
FluidState embed_plane_wave_3d(const CharacteristicFan& fan, double t, const Grid& grid);

}  // namespace eulerform

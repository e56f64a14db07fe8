#include "eulerform/shock1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include "eulerform/errors.hpp"

namespace eulerform {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

RiemannMap::RiemannMap(EosModel eos, double entropy) : eos_(std::move(eos)), entropy_(entropy) {}

double RiemannMap::sound_speed(double rho_log) const { return eos_.sound_speed(rho_log, entropy_); }

double RiemannMap::F(double rho_log) const {
  if (rho_log == 0.0) return 0.0;
  // Integrate over [0, 1] after r = rho_log * t so the relative tolerance does
  // not chase the absolute roundoff floor when rho_log is tiny.
  auto c = [&](double t) { return sound_speed(rho_log * t); };
  return rho_log *
         boost::math::quadrature::gauss_kronrod<double, 31>::integrate(c, 0.0, 1.0, 15, 1e-12);
}

double RiemannMap::F_inverse(double y) const {
  if (!std::isfinite(y)) throw DomainError("F_inverse of a non-finite value");
  if (y == 0.0) return 0.0;
  double lo = -1.0, hi = 1.0;
  while (F(hi) < y) {
    lo = hi;
    hi *= 2.0;
    if (hi > 64.0) throw DomainError("value outside the range of the Riemann map");
  }
  while (F(lo) > y) {
    hi = lo;
    lo *= 2.0;
    if (lo < -64.0) throw DomainError("value outside the range of the Riemann map");
  }
  const double guess = std::clamp(y / sound_speed(0.0), lo, hi);
  std::uintmax_t iters = 100;
  const double root = boost::math::tools::newton_raphson_iterate(
      [&](double r) { return std::make_pair(F(r) - y, sound_speed(r)); }, guess, lo, hi,
      std::numeric_limits<double>::digits - 4, iters);
  if (iters >= 100) throw NumericError("Riemann map inversion did not converge");
  return root;
}

double RiemannMap::dlambda_dR(double rho_log) const {
  const EosPoint e = eos_.evaluate(rho_log, entropy_);
  return 0.5 + e.c_rho / (2.0 * e.c);
}

std::pair<double, double> RiemannMap::riemann_invariants(double v1, double rho_log) const {
  const double f = F(rho_log);
  return {v1 + f, v1 - f};
}

std::pair<double, double> RiemannMap::invert(double r_plus, double r_minus) const {
  return {0.5 * (r_plus + r_minus), F_inverse(0.5 * (r_plus - r_minus))};
}

Profile sinusoidal_profile(double amplitude) {
  return {[amplitude](double x) { return amplitude * std::sin(x); },
          [amplitude](double x) { return amplitude * std::cos(x); }};
}

Profile constant_profile(double value) {
  return {[value](double) { return value; }, [](double) { return 0.0; }};
}

CharacteristicFan::CharacteristicFan(RiemannMap map, Profile profile, int search_points)
    : map_(std::move(map)), profile_(std::move(profile)) {
  if (search_points < 16) throw UsageError("characteristic fan needs at least 16 foot points");
  const double h = kTwoPi / search_points;
  x0_.resize(search_points);
  lambda_.resize(search_points);
  dlambda_.resize(search_points);
  c_.resize(search_points);
  for (int k = 0; k < search_points; ++k) {
    x0_[k] = k * h;
    lambda_[k] = lambda(x0_[k]);
    c_[k] = c_initial(x0_[k]);
  }
  // Five-point stencil on the periodic sample grid.
  for (int k = 0; k < search_points; ++k) {
    auto at = [&](int o) { return lambda_[(k + o + search_points) % search_points]; };
    dlambda_[k] = (at(-2) - 8.0 * at(-1) + 8.0 * at(1) - at(2)) / (12.0 * h);
  }
  lambda_min_ = *std::min_element(lambda_.begin(), lambda_.end());
  lambda_max_ = *std::max_element(lambda_.begin(), lambda_.end());

  const auto it = std::min_element(dlambda_.begin(), dlambda_.end());
  const double coarse = *it;
  const double x_best = x0_[it - dlambda_.begin()];
  // Refine the minimum of lambda' between the neighbouring samples.
  const auto refined = boost::math::tools::brent_find_minima(
      [&](double x) { return dlambda_stencil(x, h); }, x_best - h, x_best + h,
      std::numeric_limits<double>::digits / 2);
  worst_x0_ = refined.second < coarse ? refined.first : x_best;
  min_dlambda_ = std::min(refined.second, coarse);
  t_star_ = min_dlambda_ < -1e-9 ? -1.0 / min_dlambda_ : kInf;
}

double CharacteristicFan::rho_initial(double x0) const {
  return map_.F_inverse(0.5 * profile_.value(x0));
}

double CharacteristicFan::c_initial(double x0) const { return map_.sound_speed(rho_initial(x0)); }

double CharacteristicFan::lambda(double x0) const {
  const double R = profile_.value(x0);
  return 0.5 * R + map_.sound_speed(map_.F_inverse(0.5 * R));
}

double CharacteristicFan::dlambda(double x0) const {
  return map_.dlambda_dR(rho_initial(x0)) * profile_.derivative(x0);
}

double CharacteristicFan::dlambda_stencil(double x0, double h) const {
  return (lambda(x0 - 2 * h) - 8.0 * lambda(x0 - h) + 8.0 * lambda(x0 + h) - lambda(x0 + 2 * h)) /
         (12.0 * h);
}

double solve_foot_point(const CharacteristicFan& fan, double t, double x) {
  if (t >= fan.valid_until()) throw BlowupError("simple wave queried at or after the blowup time");
  if (t == 0.0) return x;
  // x0 + lambda(x0) t is increasing in x0 for t < T*, so the root is bracketed
  // by the extreme characteristic speeds.
  const double margin = 1e-9 + 1e-6 * (fan.lambda_max_ - fan.lambda_min_) * std::abs(t);
  double lo = x - fan.lambda_max_ * t - margin;
  double hi = x - fan.lambda_min_ * t + margin;
  if (t < 0.0) std::swap(lo, hi);
  const double guess = 0.5 * (lo + hi);
  std::uintmax_t iters = 200;
  const double x0 = boost::math::tools::newton_raphson_iterate(
      [&](double y) {
        return std::make_pair(y + fan.lambda(y) * t - x, 1.0 + t * fan.dlambda(y));
      },
      guess, lo, hi, std::numeric_limits<double>::digits - 6, iters);
  if (iters >= 200) throw NumericError("foot-point solve did not converge");
  return x0;
}

SimpleWaveSample simple_wave_solution(const CharacteristicFan& fan, double t, double x) {
  SimpleWaveSample s;
  s.x0 = solve_foot_point(fan, t, x);
  s.R_plus = fan.R_initial(s.x0);
  s.v1 = 0.5 * s.R_plus;
  s.rho_log = fan.map().F_inverse(0.5 * s.R_plus);
  return s;
}

double blowup_time(const CharacteristicFan& fan) { return fan.valid_until(); }

double crossing_time_bruteforce(const CharacteristicFan& fan, int samples) {
  if (samples < 16) throw UsageError("crossing search needs at least 16 samples");
  const double h = kTwoPi / samples;
  std::vector<double> lam(samples);
  for (int k = 0; k < samples; ++k) lam[k] = fan.lambda(k * h);
  double best = kInf;
  for (int k = 0; k < samples; ++k) {
    const double dl = lam[k] - lam[(k + 1) % samples];
    // Differences at the rounding level of lambda are not crossings.
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(lam[k]));
    if (dl > floor) best = std::min(best, h / dl);
  }
  return best;
}

EikonalSample eikonal_mu(const CharacteristicFan& fan, double t, double x) {
  EikonalSample e;
  e.x0 = solve_foot_point(fan, t, x);
  e.u = 1.0 - e.x0;
  const double c = fan.c_initial(e.x0);
  e.mu = (1.0 + t * fan.dlambda(e.x0)) / c;
  e.c_mu = c * e.mu;
  return e;
}

double mu_by_differencing(const CharacteristicFan& fan, double t, double x, double h) {
  auto u = [&](double tt, double xx) { return 1.0 - solve_foot_point(fan, tt, xx); };
  const double du_dt = (u(t + h, x) - u(t - h, x)) / (2.0 * h);
  const double du_dx = (u(t, x + h) - u(t, x - h)) / (2.0 * h);
  const SimpleWaveSample s = simple_wave_solution(fan, t, x);
  // (g^-1)(dt, du) = g^{0 beta} d_beta u = -d_t u - v^1 d_x u
  return -1.0 / (-du_dt - s.v1 * du_dx);
}

namespace {

// Minimises f over foot points: the cached grid then Brent refinement around
// the best sample.
template <typename Fn>
double minimise_over_foot_points(const CharacteristicFan& fan, Fn&& f) {
  const auto& x0 = fan.foot_points();
  std::size_t best = 0;
  double best_val = kInf;
  for (std::size_t k = 0; k < x0.size(); ++k) {
    const double val = f(k);
    if (val < best_val) {
      best_val = val;
      best = k;
    }
  }
  return best;
}

}  // namespace

double mu_star(const CharacteristicFan& fan, double t) {
  if (t >= fan.valid_until()) throw BlowupError("mu_star queried at or after the blowup time");
  const auto& dl = fan.dlambda_samples();
  const auto& c = fan.c_samples();
  const std::size_t k =
      minimise_over_foot_points(fan, [&](std::size_t i) { return (1.0 + t * dl[i]) / c[i]; });
  const double h = fan.foot_points()[1];
  const double x = fan.foot_points()[k];
  const auto refined = boost::math::tools::brent_find_minima(
      [&](double y) { return (1.0 + t * fan.dlambda(y)) / fan.c_initial(y); }, x - h, x + h,
      std::numeric_limits<double>::digits / 2);
  const double grid_val = (1.0 + t * dl[k]) / c[k];
  return std::min(1.0, std::min(grid_val, refined.second));
}

double max_abs_dxv1(const CharacteristicFan& fan, double t) {
  if (t >= fan.valid_until()) throw BlowupError("gradient queried at or after the blowup time");
  // d_x v^1 = R'(x0) / (2 (1 + t lambda'(x0))) along the characteristic from x0.
  auto neg = [&](double y) {
    return -std::abs(0.5 * fan.profile().derivative(y) / (1.0 + t * fan.dlambda(y)));
  };
  const auto& x0 = fan.foot_points();
  const std::size_t k = minimise_over_foot_points(fan, [&](std::size_t i) { return neg(x0[i]); });
  const double h = x0[1];
  const auto refined = boost::math::tools::brent_find_minima(
      neg, x0[k] - h, x0[k] + h, std::numeric_limits<double>::digits / 2);
  return std::max(-neg(x0[k]), -refined.second);
}

double blowup_product_check(const CharacteristicFan& fan, double t) {
  if (t >= fan.valid_until()) throw BlowupError("product queried at or after the blowup time");
  // mu |d_x v^1| = |R'(x0)| / (2 c(x0)) on each characteristic.
  const auto& x0 = fan.foot_points();
  const auto& dl = fan.dlambda_samples();
  const auto& c = fan.c_samples();
  double best = 0.0;
  for (std::size_t k = 0; k < x0.size(); ++k) {
    const double J = 1.0 + t * dl[k];
    const double mu = J / c[k];
    const double dxv = 0.5 * std::abs(fan.profile().derivative(x0[k])) / J;
    best = std::max(best, mu * dxv);
  }
  return best;
}

FluidState embed_plane_wave_3d(const CharacteristicFan& fan, double t, const Grid& grid) {
  FluidState st;
  st.eos = fan.map().eos();
  st.time = t;
  st.rho_log = ScalarField(grid);
  st.v = VectorField(grid);
  st.s = ScalarField(grid, fan.map().entropy());
  const double h = grid.spacing();
  for (int i = 0; i < grid.n; ++i) {
    const SimpleWaveSample w = simple_wave_solution(fan, t, i * h);
    for (int j = 0; j < grid.n; ++j)
      for (int k = 0; k < grid.n; ++k) {
        st.rho_log.at(i, j, k) = w.rho_log;
        st.v[0].at(i, j, k) = w.v1;
      }
  }
  return st;
}

}  // namespace eulerform

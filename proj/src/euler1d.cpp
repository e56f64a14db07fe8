#include "eulerform/euler1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "eulerform/errors.hpp"

namespace eulerform {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Rates {
  std::vector<double> d_rho, d_v;
};

Rates rates(const Euler1dState& st, const RiemannMap& map) {
  const double h = st.spacing();
  const auto drho = periodic_derivative(st.rho_log, h);
  const auto dv = periodic_derivative(st.v, h);
  Rates r{std::vector<double>(st.v.size()), std::vector<double>(st.v.size())};
  for (std::size_t i = 0; i < st.v.size(); ++i) {
    const double c = map.sound_speed(st.rho_log[i]);
    r.d_rho[i] = -st.v[i] * drho[i] - dv[i];
    r.d_v[i] = -st.v[i] * dv[i] - c * c * drho[i];
  }
  return r;
}

Euler1dState combine(const Euler1dState& base, const Rates& r, double w) {
  Euler1dState out = base;
  for (std::size_t i = 0; i < base.v.size(); ++i) {
    out.rho_log[i] += w * r.d_rho[i];
    out.v[i] += w * r.d_v[i];
  }
  return out;
}

double max_abs(const std::vector<double>& f) {
  double m = 0.0;
  for (double x : f) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

double Euler1dState::spacing() const { return kTwoPi / static_cast<double>(v.size()); }

Euler1dState euler1d_initial(const CharacteristicFan& fan, int n) {
  if (n < 16) throw UsageError("1D grid needs at least 16 points");
  Euler1dState st;
  st.rho_log.resize(n);
  st.v.resize(n);
  const double h = kTwoPi / n;
  for (int i = 0; i < n; ++i) {
    const double R = fan.R_initial(i * h);
    st.v[i] = 0.5 * R;
    st.rho_log[i] = fan.map().F_inverse(0.5 * R);
  }
  return st;
}

std::vector<double> periodic_derivative(const std::vector<double>& f, double h) {
  const int n = static_cast<int>(f.size());
  // Padded copy keeps the inner loop free of index wrapping.
  std::vector<double> pad(n + 4);
  pad[0] = f[n - 2];
  pad[1] = f[n - 1];
  std::copy(f.begin(), f.end(), pad.begin() + 2);
  pad[n + 2] = f[0];
  pad[n + 3] = f[1];
  const double w = 1.0 / (12.0 * h);
  std::vector<double> d(n);
  for (int i = 0; i < n; ++i)
    d[i] = (pad[i] - 8.0 * pad[i + 1] + 8.0 * pad[i + 3] - pad[i + 4]) * w;
  return d;
}

Euler1dState euler1d_step(const Euler1dState& state, const RiemannMap& map, double dt) {
  const Rates k1 = rates(state, map);
  const Rates k2 = rates(combine(state, k1, 0.5 * dt), map);
  const Rates k3 = rates(combine(state, k2, 0.5 * dt), map);
  const Rates k4 = rates(combine(state, k3, dt), map);
  Euler1dState out = state;
  for (std::size_t i = 0; i < state.v.size(); ++i) {
    out.rho_log[i] +=
        dt / 6.0 * (k1.d_rho[i] + 2.0 * k2.d_rho[i] + 2.0 * k3.d_rho[i] + k4.d_rho[i]);
    out.v[i] += dt / 6.0 * (k1.d_v[i] + 2.0 * k2.d_v[i] + 2.0 * k3.d_v[i] + k4.d_v[i]);
    if (!std::isfinite(out.rho_log[i]) || !std::isfinite(out.v[i]))
      throw BlowupError("non-finite value in 1D evolution");
  }
  out.time = state.time + dt;
  return out;
}

std::vector<double> r_plus_samples(const Euler1dState& state, const RiemannMap& map) {
  std::vector<double> r(state.v.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = state.v[i] + map.F(state.rho_log[i]);
  return r;
}

double periodic_interpolate(const std::vector<double>& f, double h, double x) {
  const int n = static_cast<int>(f.size());
  const double u = x / h;
  const int i0 = static_cast<int>(std::floor(u));
  const double t = u - i0;
  auto at = [&](int o) { return f[((i0 + o) % n + n) % n]; };
  // Nodes at -1, 0, 1, 2.
  const double wm = -t * (t - 1.0) * (t - 2.0) / 6.0;
  const double w0 = (t + 1.0) * (t - 1.0) * (t - 2.0) / 2.0;
  const double w1 = -(t + 1.0) * t * (t - 2.0) / 2.0;
  const double w2 = (t + 1.0) * t * (t - 1.0) / 6.0;
  return wm * at(-1) + w0 * at(0) + w1 * at(1) + w2 * at(2);
}

Euler1dStudy euler1d_blowup_study(const CharacteristicFan& fan, const Euler1dOptions& opts) {
  const RiemannMap& map = fan.map();
  Euler1dState st = euler1d_initial(fan, opts.n);
  const double h = st.spacing();
  const double t_star = fan.valid_until();
  const bool compressive = std::isfinite(t_star);
  const double t_end = compressive ? t_star : opts.horizon;

  // Riccati data on the worst characteristic: d_t p = -k p^2 with k = dlambda/dR.
  const double x_worst = fan.worst_foot_point();
  const double p0 = fan.profile().derivative(x_worst);
  const double k = map.dlambda_dR(fan.rho_initial(x_worst));
  const double lam_worst = fan.lambda(x_worst);

  Euler1dStudy out;
  auto record = [&](const Euler1dState& s) {
    // d_x R_+ = d_x v + c d_x rho avoids evaluating F on every step.
    const auto dv = periodic_derivative(s.v, h);
    const auto drho = periodic_derivative(s.rho_log, h);
    std::vector<double> dR(dv.size());
    for (std::size_t i = 0; i < dR.size(); ++i)
      dR[i] = dv[i] + map.sound_speed(s.rho_log[i]) * drho[i];
    out.times.push_back(s.time);
    out.max_abs_dRplus.push_back(max_abs(dR));
    if (compressive && s.time <= opts.riccati_until * t_star) {
      const double x = std::fmod(x_worst + lam_worst * s.time, kTwoPi);
      const double pde = periodic_interpolate(dR, h, x);
      const double riccati = 1.0 / (1.0 / p0 + k * s.time);
      out.riccati_max_rel_error =
          std::max(out.riccati_max_rel_error, std::abs(pde / riccati - 1.0));
    }
    return dR;
  };
  record(st);
  const double inv0 = 1.0 / out.max_abs_dRplus.front();

  const double dt_base = opts.cfl * h / 2.0;
  const double t_compare = compressive ? opts.compare_at * t_star : -1.0;
  bool compared = !compressive;
  while (st.time < t_end) {
    double speed = 0.0;
    for (int i = 0; i < st.n(); ++i)
      speed = std::max(speed, std::abs(st.v[i]) + map.sound_speed(st.rho_log[i]));
    double dt = opts.cfl * h / std::max(speed, 1e-12);
    dt = std::min(dt, std::max(dt_base * 1e-3, t_end - st.time));
    if (!compared && st.time + dt >= t_compare) dt = t_compare - st.time;
    st = euler1d_step(st, map, dt);
    if (!compared && st.time >= t_compare) {
      st.time = t_compare;
      const auto R = r_plus_samples(st, map);
      double err = 0.0;
      for (int i = 0; i < st.n(); ++i) {
        const SimpleWaveSample w = simple_wave_solution(fan, st.time, i * h);
        err = std::max({err, std::abs(R[i] - w.R_plus), std::abs(st.rho_log[i] - w.rho_log)});
      }
      out.sup_error_vs_exact = err;
      compared = true;
    }
    record(st);
    if (compressive && 1.0 / out.max_abs_dRplus.back() < opts.fit_lower * inv0) break;
  }
  out.final_time = st.time;

  const auto [lo, hi] = std::minmax_element(out.max_abs_dRplus.begin(), out.max_abs_dRplus.end());
  out.gradient_variation = (*hi - *lo) / *lo;

  // Least-squares line through 1/max|d_x R_+| inside the window.
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  int m = 0;
  for (std::size_t i = 0; i < out.times.size(); ++i) {
    const double y = 1.0 / out.max_abs_dRplus[i];
    if (y > opts.fit_upper * inv0 || y < opts.fit_lower * inv0) continue;
    const double x = out.times[i];
    sx += x, sy += y, sxx += x * x, sxy += x * y, syy += y * y;
    ++m;
  }
  if (m < 3) {
    out.fitted_blowup_time = std::numeric_limits<double>::infinity();
    return out;
  }
  const double cov = sxy - sx * sy / m;
  const double varx = sxx - sx * sx / m;
  const double vary = syy - sy * sy / m;
  const double slope = cov / varx;
  const double icpt = (sy - slope * sx) / m;
  out.fitted_blowup_time = slope < 0.0 ? -icpt / slope : std::numeric_limits<double>::infinity();
  out.fit_r_squared = vary > 0.0 ? cov * cov / (varx * vary) : 1.0;
  return out;
}

}  // namespace eulerform

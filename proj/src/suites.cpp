#include "eulerform/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <memory>
#include <numbers>

#include <boost/math/tools/roots.hpp>

#include "eulerform/errors.hpp"
#include "eulerform/euler_evolve.hpp"
#include "eulerform/fixtures.hpp"
#include "eulerform/frequency_probe.hpp"
#include "eulerform/null_structure.hpp"
#include "eulerform/reformulation.hpp"
#include "eulerform/shock1d.hpp"

namespace eulerform {

namespace {

using ojson = nlohmann::ordered_json;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

OutputFile text_file(std::string name, std::string content) {
  return {std::move(name), [content = std::move(content)](const std::string& path) {
            std::ofstream out(path, std::ios::binary);
            if (!out) throw ConfigError("cannot write '" + path + "'");
            out << content;
          }};
}

std::string csv_line(std::initializer_list<std::string> cells) {
  std::string line;
  bool first = true;
  for (const auto& c : cells) {
    if (!first) line += ',';
    line += c;
    first = false;
  }
  return line + '\n';
}

std::string fr(double x) { return format_real(x); }

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const double m = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) sx += x[i], sy += y[i];
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r_squared = syy > 0.0 ? sxy * sxy / (sxx * syy) : 1.0;
  return f;
}

}  // namespace

ojson report_header(const RunConfig& cfg) {
  ojson h;
  h["command"] = command_name(cfg.command);
  h["config_hash"] = config_hash(cfg);
  h["grid"] = {{"n", cfg.n}, {"order", cfg.stencil_order}, {"resolutions", cfg.resolutions}};
  h["eos"] = cfg.eos_json;
  h["tolerances"] = effective_json(cfg)["tolerances"];
  h["seed"] = cfg.seed;
  return h;
}

RandomState draw_state(std::mt19937_64& rng, double c_min, double c_max, double v_max) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  RandomState s;
  s.c = c_min + (c_max - c_min) * unit(rng);
  Vec3 dir{gauss(rng), gauss(rng), gauss(rng)};
  const double len = std::sqrt(dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2]);
  const double r = v_max * std::cbrt(unit(rng));
  for (int a = 0; a < 3; ++a) s.v[a] = len > 0.0 ? r * dir[a] / len : 0.0;
  return s;
}

double rho_for_sound_speed(const EosModel& eos, double c) {
  if (!(c > 0.0)) throw DomainError("sound speed must be positive");
  auto f = [&](double r) { return std::log(eos.sound_speed(r, 0.0)) - std::log(c); };
  double lo = -40.0, hi = 40.0;
  if (f(lo) * f(hi) > 0.0) throw DomainError("sound speed outside the range of the EOS");
  std::uintmax_t iters = 200;
  const auto root = boost::math::tools::toms748_solve(
      f, lo, hi, boost::math::tools::eps_tolerance<double>(52), iters);
  return 0.5 * (root.first + root.second);
}

// ---------------------------------------------------------------------------

SuiteResult run_eos_check(const RunConfig& cfg) {
  SuiteResult out;
  std::string csv = "rho_log,s,p,c,c_rho,c_s,p_s,p_s_rho,p_s_s,max_rel_error,worst_field,pass\n";
  double worst = 0.0;
  std::string worst_field;
  bool pass = true;
  const int m = 9;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      const double rho = -1.0 + 2.0 * a / (m - 1);
      const double s = -1.0 + 2.0 * b / (m - 1);
      const EosPoint e = cfg.eos.evaluate(rho, s);
      const DerivativeCheck chk = verify_derivatives(cfg.eos, rho, s, 1e-4);
      // c^2 = exp(-rho) p_rho / rho_bar is exact for the built-in models.
      const double c2_gap =
          std::abs(e.c * e.c - std::exp(-rho) * e.p_rho / cfg.eos.background_density()) / (e.c * e.c);
      const bool ok = chk.max_rel_error <= cfg.tol.eos_derivative && c2_gap <= 1e-13 && e.c > 0.0;
      pass = pass && ok;
      if (chk.max_rel_error >= worst) {
        worst = chk.max_rel_error;
        worst_field = chk.worst_field;
      }
      csv += csv_line({fr(rho), fr(s), fr(e.p), fr(e.c), fr(e.c_rho), fr(e.c_s), fr(e.p_s),
                       fr(e.p_s_rho), fr(e.p_s_s), fr(chk.max_rel_error), chk.worst_field,
                       ok ? "true" : "false"});
    }
  }
  bool barotropic_ok = true;
  if (cfg.eos.barotropic()) {
    for (double rho : {-1.0, 0.0, 1.0}) {
      const EosPoint e = cfg.eos.evaluate(rho, 0.7);
      barotropic_ok = barotropic_ok && e.p_s == 0.0 && e.p_s_rho == 0.0 && e.p_s_s == 0.0 && e.c_s == 0.0;
    }
  }
  pass = pass && barotropic_ok;
  out.report["header"] = report_header(cfg);
  out.report["results"] = {{"samples", m * m},
                           {"max_rel_error", worst},
                           {"worst_field", worst_field},
                           {"barotropic", cfg.eos.barotropic()},
                           {"barotropic_s_derivatives_zero", barotropic_ok},
                           {"pass", pass}};
  out.pass = pass;
  out.files.push_back(text_file("eos_check.csv", std::move(csv)));
  return out;
}

SuiteResult run_geometry_check(const RunConfig& cfg) {
  SuiteResult out;
  std::mt19937_64 rng(cfg.seed);
  std::string csv = "trial,c,v1,v2,v3,inverse_error,det_error,transport_error,pass\n";
  double worst_inv = 0, worst_det = 0, worst_tr = 0;
  bool pass = true;
  for (int t = 0; t < cfg.nullframe.trials; ++t) {
    const RandomState st = draw_state(rng, cfg.nullframe.c_min, cfg.nullframe.c_max, cfg.nullframe.v_max);
    const MetricInvariants inv = metric_invariants(metric_at(st.c, st.v));
    const bool ok = inv.inverse_error <= cfg.tol.metric && inv.det_error <= cfg.tol.metric &&
                    inv.transport_error <= cfg.tol.metric;
    pass = pass && ok;
    worst_inv = std::max(worst_inv, inv.inverse_error);
    worst_det = std::max(worst_det, inv.det_error);
    worst_tr = std::max(worst_tr, inv.transport_error);
    csv += csv_line({std::to_string(t), fr(st.c), fr(st.v[0]), fr(st.v[1]), fr(st.v[2]),
                     fr(inv.inverse_error), fr(inv.det_error), fr(inv.transport_error),
                     ok ? "true" : "false"});
  }
  out.report["header"] = report_header(cfg);
  out.report["results"] = {{"trials", cfg.nullframe.trials},
                           {"max_inverse_error", worst_inv},
                           {"max_det_error", worst_det},
                           {"max_transport_error", worst_tr},
                           {"pass", pass}};
  out.pass = pass;
  out.files.push_back(text_file("geometry.csv", std::move(csv)));
  return out;
}

SuiteResult run_nullframe_check(const RunConfig& cfg) {
  SuiteResult out;
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const auto dirs = cube_directions();

  // Q^g for two unknown pairs, the six coordinate Q_(ab), and the control.
  const std::vector<QuadraticTerm> qg_terms = {qg_term(cfg.eos, 0, 1), qg_term(cfg.eos, 1, 2)};
  std::vector<QuadraticTerm> qab_terms;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) qab_terms.push_back(qab_term(a, b, 1, 2));
  const QuadraticTerm control = dt_squared_term(1);

  std::string csv = "trial,c,v1,v2,v3,max_frame_residual,qg_diag_uLuL,qg_diag_LL,pass\n";
  double worst_frame = 0, worst_dyadic = 0, worst_qg = 0, worst_qab = 0, worst_expansion = 0;
  double control_min = std::numeric_limits<double>::infinity();
  int failed_trials = 0;
  for (int t = 0; t < cfg.nullframe.trials; ++t) {
    const RandomState st = draw_state(rng, cfg.nullframe.c_min, cfg.nullframe.c_max, cfg.nullframe.v_max);
    StateArray V{};
    V[0] = rho_for_sound_speed(cfg.eos, st.c);
    for (int a = 0; a < 3; ++a) V[1 + a] = st.v[a];
    for (int q = 5; q < kUnknowns; ++q) V[q] = 0.1 * unit(rng);
    StateGradient dV;
    for (int a = 0; a < 4; ++a)
      for (int q = 0; q < kUnknowns; ++q) dV(a, q) = unit(rng);
    const MetricPoint point = metric_at(cfg.eos.evaluate(V[0], V[4]), st.v);

    double frame_res = 0, qg_uu = 0, qg_ll = 0, qab_max = 0, expansion = 0, ctrl = 0;
    double ctrl_min_trial = std::numeric_limits<double>::infinity();
    for (const Vec3& n : dirs) {
      const NullFrame frame = build_null_frame(point, n);
      const double dyadic = (decompose_inverse_metric(frame) - point.g_inv).cwiseAbs().maxCoeff();
      const FrameCoefficients fc = frame_coefficients(frame);
      frame_res = std::max({frame_res, frame_relation_residual(frame), dyadic, fc.reconstruction_error});
      worst_dyadic = std::max(worst_dyadic, dyadic);
      for (const auto& term : qg_terms) {
        const StrongNullReport r = strong_null_check(term, frame, V, dV, cfg.tol.frame);
        qg_uu = std::max(qg_uu, r.diag_uLuL);
        qg_ll = std::max(qg_ll, r.diag_LL);
        expansion = std::max(expansion, r.expansion_error);
      }
      for (const auto& term : qab_terms) {
        const StrongNullReport r = strong_null_check(term, frame, V, dV, cfg.tol.frame);
        qab_max = std::max({qab_max, r.diag_uLuL, r.diag_LL});
        expansion = std::max(expansion, r.expansion_error);
      }
      const StrongNullReport rc = strong_null_check(control, frame, V, dV, cfg.tol.frame);
      ctrl = std::max(rc.diag_uLuL, rc.diag_LL);
      ctrl_min_trial = std::min(ctrl_min_trial, ctrl);
      expansion = std::max(expansion, rc.expansion_error);
    }
    const bool ok = frame_res <= cfg.tol.frame && qg_uu <= cfg.tol.frame && qg_ll <= cfg.tol.frame &&
                    qab_max <= cfg.tol.frame && expansion <= cfg.tol.frame &&
                    ctrl_min_trial >= cfg.tol.control_min;
    if (!ok) ++failed_trials;
    worst_frame = std::max(worst_frame, frame_res);
    worst_qg = std::max({worst_qg, qg_uu, qg_ll});
    worst_qab = std::max(worst_qab, qab_max);
    worst_expansion = std::max(worst_expansion, expansion);
    control_min = std::min(control_min, ctrl_min_trial);
    csv += csv_line({std::to_string(t), fr(st.c), fr(st.v[0]), fr(st.v[1]), fr(st.v[2]), fr(frame_res),
                     fr(qg_uu), fr(qg_ll), ok ? "true" : "false"});
  }
  out.pass = failed_trials == 0;
  out.report["header"] = report_header(cfg);
  out.report["results"] = {{"trials", cfg.nullframe.trials},
                           {"directions", dirs.size()},
                           {"max_frame_residual", worst_frame},
                           {"max_dyadic_error", worst_dyadic},
                           {"max_qg_diagonal", worst_qg},
                           {"max_qab_diagonal", worst_qab},
                           {"max_expansion_error", worst_expansion},
                           {"min_control_diagonal", control_min},
                           {"failed_trials", failed_trials},
                           {"pass", out.pass}};
  out.files.push_back(text_file("nullframe.csv", std::move(csv)));
  return out;
}

ResidualReport residual_study(const RunConfig& cfg, const std::string& fixture,
                              const std::vector<int>& resolutions, int stencil_order) {
  std::vector<std::vector<ResidualRow>> per_resolution;
  for (int n : resolutions) {
    const Grid grid(n, stencil_order);
    const double dt = cfg.dt_for(n);
    const FluidState initial = make_fixture(fixture, grid, cfg.eos);
    const SliceStack stack = build_slice_stack(initial, cfg.t_center, dt);
    per_resolution.push_back(measure_residuals(system_residuals(stack), grid, dt));
  }
  ConvergenceThresholds th = default_thresholds(stencil_order);
  th.exact_tol = cfg.tol.exact;
  return assemble_report(per_resolution, th);
}

namespace {

ojson probe_json(const RunConfig& cfg, bool& pass) {
  const Grid grid(cfg.probe.n, cfg.stencil_order);
  const FluidState base = make_fixture(cfg.fixture, grid, cfg.eos);
  struct Case {
    const char* name;
    Equation eq;
    ProbeVariable var;
    bool control;
  };
  const Case cases[] = {{"transport_C/velocity", Equation::transport_C, ProbeVariable::velocity, false},
                        {"transport_C/density", Equation::transport_C, ProbeVariable::density, false},
                        {"div_omega/velocity", Equation::div_omega, ProbeVariable::velocity, false},
                        {"div_omega/density", Equation::div_omega, ProbeVariable::density, false},
                        {"control", Equation::transport_C, ProbeVariable::velocity, true}};
  ojson arr = ojson::array();
  for (const Case& c : cases) {
    ProbeOptions opts;
    opts.variable = c.var;
    opts.inject_second_derivative = c.control;
    const ProbeResult r = frequency_scaling_probe(c.eq, base, cfg.probe.k, cfg.probe.eps, opts);
    bool ok;
    if (c.control)
      ok = !r.independent && r.exponent >= cfg.tol.control_low && r.exponent <= cfg.tol.control_high;
    else
      ok = r.independent || (r.exponent >= cfg.tol.probe_low && r.exponent <= cfg.tol.probe_high);
    pass = pass && ok;
    ojson j;
    j["case"] = c.name;
    j["response_k"] = r.response_k;
    j["response_2k"] = r.response_2k;
    if (r.independent)
      j["exponent"] = "independent";
    else
      j["exponent"] = r.exponent;
    j["pass"] = ok;
    arr.push_back(std::move(j));
  }
  return arr;
}

ojson discrete_identities_json(const RunConfig& cfg, bool& pass) {
  const Grid grid(cfg.n, cfg.stencil_order);
  const FluidState st = make_fixture(cfg.fixture, grid, cfg.eos);
  const double curl_grad = sup_norm(flat_curl(gradient(st.s)));
  const double div_curl = sup_norm(flat_div(flat_curl(st.v)));
  const bool ok = curl_grad <= 1e-13 && div_curl <= 1e-13;
  pass = pass && ok;
  return {{"curl_grad_s", curl_grad}, {"div_curl_v", div_curl}, {"pass", ok}};
}

}  // namespace

SuiteResult run_reform_verify(const RunConfig& cfg) {
  SuiteResult out;
  const ResidualReport rep = residual_study(cfg, cfg.fixture, cfg.resolutions, cfg.stencil_order);
  bool pass = rep.pass();
  ojson results;
  results["residuals"] = residual_json(rep);
  results["discrete_identities"] = discrete_identities_json(cfg, pass);
  results["frequency_probe"] = probe_json(cfg, pass);
  results["pass"] = pass;
  out.report["header"] = report_header(cfg);
  out.report["results"] = std::move(results);
  out.pass = pass;
  out.files.push_back(text_file("residuals.csv", residual_csv(rep)));
  return out;
}

SuiteResult run_converge(const RunConfig& cfg) {
  SuiteResult out;
  const ResidualReport rep = residual_study(cfg, cfg.fixture, cfg.resolutions, cfg.stencil_order);
  out.pass = rep.pass();
  out.report["header"] = report_header(cfg);
  out.report["results"] = {{"min_order", rep.thresholds.min_order},
                           {"resolutions", rep.resolutions},
                           {"residuals", residual_json(rep)},
                           {"pass", out.pass}};
  out.files.push_back(text_file("converge.csv", residual_csv(rep)));
  return out;
}

// ---------------------------------------------------------------------------

Shock1dAnalysis shock1d_analysis(const EosModel& eos, const Shock1dSettings& settings) {
  Shock1dAnalysis a;
  const Profile profile = sinusoidal_profile(settings.amplitude);
  const CharacteristicFan fan(RiemannMap(eos, 0.0), profile, settings.search_points);
  a.blowup_time = fan.valid_until();
  a.compressive = std::isfinite(a.blowup_time);
  a.crossing_time = crossing_time_bruteforce(fan, settings.crossing_samples);

  Euler1dOptions pde_opts;
  pde_opts.n = settings.pde_n;
  if (a.compressive) {
    a.horizon = settings.end_fraction * a.blowup_time;
  } else {
    const CharacteristicFan ref(RiemannMap(EosModel::polytropic(settings.reference_gamma), 0.0), profile,
                                settings.search_points);
    a.horizon = settings.horizon_factor * ref.valid_until();
    pde_opts.horizon = a.horizon;
  }

  const int m = settings.series_points;
  a.mu_star_min = std::numeric_limits<double>::infinity();
  a.product_min = std::numeric_limits<double>::infinity();
  for (int k = 0; k < m; ++k) {
    Shock1dSeriesRow row;
    row.t = a.horizon * k / (m - 1);
    row.mu_star = mu_star(fan, row.t);
    row.max_abs_dxv1 = max_abs_dxv1(fan, row.t);
    row.product = blowup_product_check(fan, row.t);
    a.mu_star_min = std::min(a.mu_star_min, row.mu_star);
    a.product_min = std::min(a.product_min, row.product);
    a.product_max = std::max(a.product_max, row.product);
    a.series.push_back(row);
  }
  a.gradient_growth = a.series.back().max_abs_dxv1 / a.series.front().max_abs_dxv1;

  a.profile_time = 0.5 * (a.compressive ? a.blowup_time : a.horizon);
  const double h = kTwoPi / settings.profile_points;
  for (int i = 0; i < settings.profile_points; ++i) {
    const double x = i * h;
    const SimpleWaveSample w = simple_wave_solution(fan, a.profile_time, x);
    const EikonalSample e = eikonal_mu(fan, a.profile_time, x);
    a.profile.push_back({x, w.R_plus, w.v1, w.rho_log, e.u, e.mu});
    if (i % 16 == 0) {
      const double diff = mu_by_differencing(fan, a.profile_time, x, 1e-4);
      a.mu_definition_gap = std::max(a.mu_definition_gap, std::abs(diff / e.mu - 1.0));
    }
  }

  if (a.compressive) {
    std::vector<double> ts, ms;
    for (int k = 0; k < 50; ++k) {
      const double t = a.blowup_time * (0.8 + 0.19 * k / 49.0);
      ts.push_back(t);
      ms.push_back(mu_star(fan, t));
    }
    const LineFit f = fit_line(ts, ms);
    a.mu_fit_r_squared = f.r_squared;
    a.mu_fit_zero = -f.intercept / f.slope;
  }

  a.pde = euler1d_blowup_study(fan, pde_opts);
  return a;
}

SuiteResult run_shock1d(const RunConfig& cfg) {
  SuiteResult out;
  const Shock1dAnalysis a = shock1d_analysis(cfg.eos, cfg.shock);

  ojson checks;
  bool pass;
  if (a.compressive) {
    const double pde_gap = std::abs(a.pde.fitted_blowup_time / a.crossing_time - 1.0);
    const double fan_gap = std::abs(a.blowup_time / a.crossing_time - 1.0);
    const double mu_zero_gap = std::abs(a.mu_fit_zero / a.blowup_time - 1.0);
    checks["blowup_time_vs_crossing"] = {{"relative_gap", fan_gap}, {"pass", fan_gap <= 1e-3}};
    checks["pde_blowup_vs_crossing"] = {{"relative_gap", pde_gap}, {"pass", pde_gap <= 0.02}};
    checks["mu_star_linear_fit"] = {{"r_squared", a.mu_fit_r_squared},
                                    {"zero", a.mu_fit_zero},
                                    {"relative_gap", mu_zero_gap},
                                    {"pass", a.mu_fit_r_squared >= 0.999 && mu_zero_gap <= 0.01}};
    checks["product_bounds"] = {{"min", a.product_min},
                                {"max", a.product_max},
                                {"gradient_growth", a.gradient_growth},
                                {"pass", a.product_min >= 0.1 && a.product_max <= 10.0 && a.gradient_growth >= 50.0}};
    checks["riccati"] = {{"max_rel_error", a.pde.riccati_max_rel_error},
                         {"pass", a.pde.riccati_max_rel_error <= 0.02}};
    checks["pde_vs_simple_wave"] = {{"sup_error", a.pde.sup_error_vs_exact},
                                    {"pass", a.pde.sup_error_vs_exact <= 1e-4}};
  } else {
    checks["mu_star_lower_bound"] = {{"min", a.mu_star_min}, {"pass", a.mu_star_min >= 0.5}};
    checks["pde_gradient_variation"] = {{"variation", a.pde.gradient_variation},
                                        {"pass", a.pde.gradient_variation <= 0.01}};
  }
  checks["mu_definition"] = {{"max_rel_gap", a.mu_definition_gap}, {"pass", a.mu_definition_gap <= 1e-6}};
  pass = true;
  for (const auto& [name, c] : checks.items()) pass = pass && c["pass"].get<bool>();

  ojson results;
  results["compressive"] = a.compressive;
  if (a.compressive)
    results["blowup_time"] = a.blowup_time;
  else
    results["blowup_time"] = "infinite";
  if (std::isfinite(a.crossing_time))
    results["crossing_time"] = a.crossing_time;
  else
    results["crossing_time"] = "infinite";
  results["horizon"] = a.horizon;
  if (std::isfinite(a.pde.fitted_blowup_time))
    results["pde_fitted_blowup_time"] = a.pde.fitted_blowup_time;
  else
    results["pde_fitted_blowup_time"] = "none";
  results["mu_star_min"] = a.mu_star_min;
  results["profile_time"] = a.profile_time;
  results["checks"] = checks;
  results["pass"] = pass;
  out.report["header"] = report_header(cfg);
  out.report["results"] = std::move(results);
  out.pass = pass;

  std::string series = "t,mu_star,max_abs_dxv1,product_mu_dxv1\n";
  for (const auto& r : a.series) series += csv_line({fr(r.t), fr(r.mu_star), fr(r.max_abs_dxv1), fr(r.product)});
  std::string profile = "x,R_plus,v1,rho_log,u,mu\n";
  for (const auto& r : a.profile)
    profile += csv_line({fr(r.x), fr(r.R_plus), fr(r.v1), fr(r.rho_log), fr(r.u), fr(r.mu)});
  out.files.push_back(text_file("shock1d_series.csv", std::move(series)));
  out.files.push_back(text_file("shock1d_profile.csv", std::move(profile)));
  return out;
}

SuiteResult run_export(const RunConfig& cfg) {
  SuiteResult out;
  const Grid grid(cfg.n, cfg.stencil_order);
  const FluidState initial = make_fixture(cfg.fixture, grid, cfg.eos);
  auto stack = std::make_shared<const SliceStack>(build_slice_stack(initial, cfg.t_center, cfg.dt_for(cfg.n)));
  bool finite = true;
  for (std::size_t q = 0; q < stack->slices.size(); ++q) {
    const FluidState& st = stack->slices[q];
    finite = finite && st.all_finite();
    auto derived = std::make_shared<const DerivedState>(compute_derived(st));
    const std::string tag = "_" + std::to_string(q) + ".csv";
    const FluidState* sp = &st;
    out.files.push_back({"rho_log" + tag, [stack, sp](const std::string& p) { write_field_csv(p, sp->rho_log); }});
    out.files.push_back({"v" + tag, [stack, sp](const std::string& p) { write_field_csv(p, sp->v); }});
    out.files.push_back({"s" + tag, [stack, sp](const std::string& p) { write_field_csv(p, sp->s); }});
    out.files.push_back({"omega" + tag, [derived](const std::string& p) { write_field_csv(p, derived->omega); }});
    out.files.push_back({"grad_ent" + tag, [derived](const std::string& p) { write_field_csv(p, derived->grad_ent); }});
  }
  ojson times = ojson::array();
  for (const auto& st : stack->slices) times.push_back(st.time);
  out.pass = finite;
  out.report["header"] = report_header(cfg);
  out.report["results"] = {{"fixture", cfg.fixture}, {"slice_times", times}, {"finite", finite}, {"pass", finite}};
  return out;
}

SuiteResult run_suite(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::eos_check: return run_eos_check(cfg);
    case Command::geometry_check: return run_geometry_check(cfg);
    case Command::nullframe_check: return run_nullframe_check(cfg);
    case Command::reform_verify: return run_reform_verify(cfg);
    case Command::converge: return run_converge(cfg);
    case Command::shock1d: return run_shock1d(cfg);
    case Command::exporter: return run_export(cfg);
  }
  throw UsageError("unknown command");
}

}  // namespace eulerform

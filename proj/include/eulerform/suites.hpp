#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eulerform/acoustic_geometry.hpp"
#include "eulerform/config.hpp"
#include "eulerform/residual_report.hpp"

namespace eulerform {

/// A file the CLI writes once the suite has finished without error.
struct OutputFile {
  std::string name;
  std::function<void(const std::string& path)> write;
};

struct SuiteResult {
  bool pass = false;
  nlohmann::ordered_json report;  // header + results
  std::vector<OutputFile> files;
};

/// Provenance block: command, config hash, grid, EOS, tolerances, seed.
nlohmann::ordered_json report_header(const RunConfig& cfg);

/// Random (c, v) with c uniform in [c_min, c_max] and v uniform in the ball of
/// radius v_max.
struct RandomState {
  double c = 1.0;
  Vec3 v{};
};
RandomState draw_state(std::mt19937_64& rng, double c_min, double c_max, double v_max);

/// rho_log with sound_speed(rho_log, 0) = c. Throws DomainError when c is
/// outside the model's range.
double rho_for_sound_speed(const EosModel& eos, double c);

SuiteResult run_eos_check(const RunConfig& cfg);
SuiteResult run_geometry_check(const RunConfig& cfg);
SuiteResult run_nullframe_check(const RunConfig& cfg);
SuiteResult run_reform_verify(const RunConfig& cfg);
SuiteResult run_converge(const RunConfig& cfg);
SuiteResult run_shock1d(const RunConfig& cfg);
SuiteResult run_export(const RunConfig& cfg);

SuiteResult run_suite(const RunConfig& cfg);

/// Residual rows for the configured fixture at every configured
/// resolution, assembled into a report.
ResidualReport residual_study(const RunConfig& cfg, const std::string& fixture,
                              const std::vector<int>& resolutions, int stencil_order);

}  // namespace eulerform

#include "eulerform/euler1d.hpp"

namespace eulerform {

struct Shock1dSeriesRow {
  double t = 0.0;
  double mu_star = 0.0;
  double max_abs_dxv1 = 0.0;
  double product = 0.0;
};

struct Shock1dProfileRow {
  double x = 0.0;
  double R_plus = 0.0;
  double v1 = 0.0;
  double rho_log = 0.0;
  double u = 0.0;
  double mu = 0.0;
};

struct Shock1dAnalysis {
  bool compressive = false;
  double blowup_time = 0.0;    // closed form from the fan
  double crossing_time = 0.0;  // brute-force characteristic crossing
  double horizon = 0.0;        // end of the time series
  std::vector<Shock1dSeriesRow> series;
  std::vector<Shock1dProfileRow> profile;
  double profile_time = 0.0;

  // Compressive data.
  double mu_fit_r_squared = 0.0;
  double mu_fit_zero = 0.0;
  double product_min = 0.0;
  double product_max = 0.0;
  double gradient_growth = 0.0;  // max|d_x v1| at the end over its initial value
  /// max relative gap between the closed-form mu and the differenced
  /// definition at the profile time.
  double mu_definition_gap = 0.0;

  double mu_star_min = 0.0;
  Euler1dStudy pde;
};

/// Fan, time series, profile, and the 1D PDE cross-check for the sinusoidal
/// profile of the given amplitude. For non-compressive data the horizon is
/// horizon_factor times T* of the polytropic reference.
Shock1dAnalysis shock1d_analysis(const EosModel& eos, const Shock1dSettings& settings);

}  // namespace eulerform

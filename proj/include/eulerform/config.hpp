#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eulerform/eos.hpp"

namespace eulerform {

enum class Command { eos_check, geometry_check, nullframe_check, reform_verify, converge, shock1d, exporter };

/// Throws ConfigError for unknown names.
Command parse_command(const std::string& name);
std::string command_name(Command c);

struct Tolerances {
  double metric = 1e-12;         // metric algebra identities
  double frame = 1e-10;          // null-frame relations and strong null diagonals
  double exact = 1e-12;          // residuals labelled "exact"
  double eos_derivative = 1e-6;  // relative error of EOS derivatives vs differences
  double control_min = 0.1;      // negative control must exceed this
  double probe_low = 0.8;
  double probe_high = 1.2;
  double control_low = 1.8;
  double control_high = 2.2;
};

struct Shock1dSettings {
  double amplitude = 0.5;
  int search_points = 4096;
  int crossing_samples = 65536;
  int pde_n = 1024;
  int series_points = 200;
  int profile_points = 256;
  /// Fraction of T* the time series runs to for compressive data.
  double end_fraction = 0.99;
  /// gamma of the polytropic reference whose T* sets the horizon for
  /// non-compressive runs (horizon = horizon_factor * T*_ref).
  double reference_gamma = 1.4;
  double horizon_factor = 10.0;
};

struct NullframeSettings {
  int trials = 1000;
  double c_min = 0.5;
  double c_max = 3.0;
  double v_max = 2.0;
};

struct ProbeSettings {
  int n = 64;  // probe grid, independent of grid.n
  int k = 4;
  double eps = 1e-6;
};

/// Effective configuration after defaults and command-line overrides.
struct RunConfig {
  Command command = Command::reform_verify;
  std::string output_dir = ".";
  std::uint64_t seed = 42;
  std::optional<int> threads;

  EosModel eos = EosModel::polytropic(1.4);
  nlohmann::ordered_json eos_json;  // normalized EOS block
  int n = 32;
  int stencil_order = 4;
  std::vector<int> resolutions;  // reform-verify and converge
  std::optional<double> dt;      // absolute step; otherwise dt_factor * h
  double dt_factor = 0.1;
  double t_center = 0.25;
  std::string fixture = "smooth-default";

  Tolerances tol;
  Shock1dSettings shock;
  NullframeSettings nullframe;
  ProbeSettings probe;

  double dt_for(int n_cells) const;
};

struct Overrides {
  std::optional<std::string> out;
  std::optional<std::uint64_t> seed;
  std::optional<int> n;
  std::optional<std::string> eos;
  std::optional<int> threads;
};

/// Parses and validates; every problem is reported as ConfigError.
RunConfig parse_config(Command command, const nlohmann::json& doc, const Overrides& ov = {});
RunConfig load_config(Command command, const std::string& path, const Overrides& ov = {});

/// EOS from its JSON block {"kind", "gamma", "background_density", ...}.
EosModel eos_from_json(const nlohmann::json& block);
/// Default block for a bare kind name (polytropic gamma 1.4, chaplygin C0 0 C1 1).
nlohmann::ordered_json default_eos_json(const std::string& kind);

/// Canonical JSON of the effective configuration (no output directory or
/// thread count, so it is identical across runs that should agree).
nlohmann::ordered_json effective_json(const RunConfig& cfg);

/// 64-bit FNV-1a of the canonical JSON, as 16 hex digits.
std::string config_hash(const RunConfig& cfg);
std::uint64_t fnv1a(const std::string& bytes);

}  // namespace eulerform

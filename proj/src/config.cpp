#include "eulerform/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "eulerform/errors.hpp"
#include "eulerform/fixtures.hpp"

namespace eulerform {

namespace {

using json = nlohmann::json;

double number(const json& obj, const char* key, double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(std::string("'") + key + "' must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(std::string("'") + key + "' must be finite");
  return x;
}

int integer(const json& obj, const char* key, int fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw ConfigError(std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

const json& object(const json& doc, const char* key) {
  static const json empty = json::object();
  if (!doc.contains(key)) return empty;
  const json& v = doc.at(key);
  if (!v.is_object()) throw ConfigError(std::string("'") + key + "' must be an object");
  return v;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

}  // namespace

Command parse_command(const std::string& name) {
  if (name == "eos-check") return Command::eos_check;
  if (name == "geometry-check") return Command::geometry_check;
  if (name == "nullframe-check") return Command::nullframe_check;
  if (name == "reform-verify") return Command::reform_verify;
  if (name == "converge") return Command::converge;
  if (name == "shock1d") return Command::shock1d;
  if (name == "export") return Command::exporter;
  throw ConfigError("unknown command '" + name + "'");
}

std::string command_name(Command c) {
  switch (c) {
    case Command::eos_check: return "eos-check";
    case Command::geometry_check: return "geometry-check";
    case Command::nullframe_check: return "nullframe-check";
    case Command::reform_verify: return "reform-verify";
    case Command::converge: return "converge";
    case Command::shock1d: return "shock1d";
    case Command::exporter: return "export";
  }
  return "unknown";
}

nlohmann::ordered_json default_eos_json(const std::string& kind) {
  nlohmann::ordered_json j;
  j["kind"] = kind;
  if (kind == "polytropic") {
    j["gamma"] = 1.4;
    j["background_density"] = 1.0;
    j["entropy_scale"] = 1.0;
  } else if (kind == "chaplygin") {
    j["C0"] = 0.0;
    j["C1"] = 1.0;
    j["background_density"] = 1.0;
  } else {
    throw ConfigError("unknown EOS kind '" + kind + "' (expected polytropic or chaplygin)");
  }
  return j;
}

EosModel eos_from_json(const json& block) {
  require(block.is_object(), "'eos' must be an object");
  require(block.contains("kind") && block.at("kind").is_string(), "'eos.kind' must be a string");
  const std::string kind = block.at("kind").get<std::string>();
  const double bg = number(block, "background_density", 1.0);
  if (kind == "polytropic")
    return EosModel::polytropic(number(block, "gamma", 1.4), bg, number(block, "entropy_scale", 1.0));
  if (kind == "chaplygin") return EosModel::chaplygin(number(block, "C0", 0.0), number(block, "C1", 1.0), bg);
  throw ConfigError("unknown EOS kind '" + kind + "' (expected polytropic or chaplygin)");
}

double RunConfig::dt_for(int n_cells) const {
  if (dt && n_cells == n) return *dt;
  return dt_factor * 2.0 * std::numbers::pi / n_cells;
}

RunConfig parse_config(Command command, const json& doc, const Overrides& ov) {
  require(doc.is_object(), "config must be a JSON object");
  RunConfig cfg;
  cfg.command = command;

  // EOS: --eos replaces the block with the named model's defaults.
  if (ov.eos) {
    cfg.eos_json = default_eos_json(*ov.eos);
  } else if (doc.contains("eos")) {
    const json& block = doc.at("eos");
    require(block.is_object(), "'eos' must be an object");
    cfg.eos_json = nlohmann::ordered_json(block);
  } else {
    cfg.eos_json = default_eos_json("polytropic");
  }
  cfg.eos = eos_from_json(cfg.eos_json);

  const json& grid = object(doc, "grid");
  cfg.n = ov.n ? *ov.n : integer(grid, "n", 32);
  cfg.stencil_order = integer(grid, "order", 4);
  require(cfg.n >= 8 && cfg.n <= 512, "grid.n must lie in [8, 512]");
  require(cfg.stencil_order == 2 || cfg.stencil_order == 4, "grid.order must be 2 or 4");

  if (ov.n) {
    cfg.resolutions = {*ov.n};
  } else if (doc.contains("resolutions")) {
    const json& r = doc.at("resolutions");
    require(r.is_array() && !r.empty(), "'resolutions' must be a non-empty array");
    for (const json& x : r) {
      require(x.is_number_integer(), "'resolutions' entries must be integers");
      const int v = x.get<int>();
      require(v >= 8 && v <= 512, "resolutions must lie in [8, 512]");
      require(cfg.resolutions.empty() || v > cfg.resolutions.back(),
              "resolutions must be strictly increasing");
      cfg.resolutions.push_back(v);
    }
  } else if (command == Command::converge) {
    cfg.resolutions = {16, 32, 64};
  } else {
    cfg.resolutions = {cfg.n};
  }

  if (doc.contains("dt") && !doc.at("dt").is_null()) {
    cfg.dt = number(doc, "dt", 0.0);
    require(*cfg.dt > 0.0, "'dt' must be positive");
  }
  cfg.dt_factor = number(doc, "dt_factor", 0.1);
  require(cfg.dt_factor > 0.0 && cfg.dt_factor <= 0.5, "'dt_factor' must lie in (0, 0.5]");
  cfg.t_center = number(doc, "t_center", 0.25);
  require(cfg.t_center > 0.0, "'t_center' must be positive");
  for (int n_cells : cfg.resolutions)
    require(cfg.t_center >= 2.0 * cfg.dt_for(n_cells), "'t_center' must be at least 2 dt");

  if (doc.contains("fixture")) {
    require(doc.at("fixture").is_string(), "'fixture' must be a string");
    cfg.fixture = doc.at("fixture").get<std::string>();
  }
  require(known_fixture(cfg.fixture), "unknown fixture '" + cfg.fixture + "'");

  const json& tol = object(doc, "tolerances");
  cfg.tol.metric = number(tol, "metric", cfg.tol.metric);
  cfg.tol.frame = number(tol, "frame", cfg.tol.frame);
  cfg.tol.exact = number(tol, "exact", cfg.tol.exact);
  cfg.tol.eos_derivative = number(tol, "eos_derivative", cfg.tol.eos_derivative);
  require(cfg.tol.metric > 0 && cfg.tol.frame > 0 && cfg.tol.exact >= 0 && cfg.tol.eos_derivative > 0,
          "tolerances must be positive");

  const json& sh = object(doc, "shock1d");
  cfg.shock.amplitude = number(sh, "amplitude", cfg.shock.amplitude);
  cfg.shock.search_points = integer(sh, "search_points", cfg.shock.search_points);
  cfg.shock.crossing_samples = integer(sh, "crossing_samples", cfg.shock.crossing_samples);
  cfg.shock.pde_n = integer(sh, "pde_n", cfg.shock.pde_n);
  cfg.shock.series_points = integer(sh, "series_points", cfg.shock.series_points);
  cfg.shock.profile_points = integer(sh, "profile_points", cfg.shock.profile_points);
  cfg.shock.end_fraction = number(sh, "end_fraction", cfg.shock.end_fraction);
  cfg.shock.reference_gamma = number(sh, "reference_gamma", cfg.shock.reference_gamma);
  cfg.shock.horizon_factor = number(sh, "horizon_factor", cfg.shock.horizon_factor);
  require(cfg.shock.amplitude > 0.0 && cfg.shock.amplitude < 1.0, "shock1d.amplitude must lie in (0, 1)");
  require(cfg.shock.search_points >= 64, "shock1d.search_points must be >= 64");
  require(cfg.shock.crossing_samples >= 64, "shock1d.crossing_samples must be >= 64");
  require(cfg.shock.pde_n >= 64, "shock1d.pde_n must be >= 64");
  require(cfg.shock.series_points >= 10, "shock1d.series_points must be >= 10");
  require(cfg.shock.profile_points >= 8, "shock1d.profile_points must be >= 8");
  require(cfg.shock.end_fraction > 0.0 && cfg.shock.end_fraction < 1.0,
          "shock1d.end_fraction must lie in (0, 1)");
  require(cfg.shock.reference_gamma > 1.0, "shock1d.reference_gamma must exceed 1");
  require(cfg.shock.horizon_factor > 0.0, "shock1d.horizon_factor must be positive");

  const json& nf = object(doc, "nullframe");
  cfg.nullframe.trials = integer(nf, "trials", cfg.nullframe.trials);
  cfg.nullframe.c_min = number(nf, "c_min", cfg.nullframe.c_min);
  cfg.nullframe.c_max = number(nf, "c_max", cfg.nullframe.c_max);
  cfg.nullframe.v_max = number(nf, "v_max", cfg.nullframe.v_max);
  require(cfg.nullframe.trials >= 1, "nullframe.trials must be >= 1");
  require(cfg.nullframe.c_min > 0.0 && cfg.nullframe.c_max >= cfg.nullframe.c_min,
          "nullframe sound-speed range must satisfy 0 < c_min <= c_max");
  require(cfg.nullframe.v_max >= 0.0, "nullframe.v_max must be >= 0");

  const json& pr = object(doc, "probe");
  cfg.probe.n = integer(pr, "n", cfg.probe.n);
  cfg.probe.k = integer(pr, "k", cfg.probe.k);
  cfg.probe.eps = number(pr, "eps", cfg.probe.eps);
  require(cfg.probe.n >= 16 && cfg.probe.n <= 128, "probe.n must lie in [16, 128]");
  require(cfg.probe.k >= 1 && 16 * cfg.probe.k <= cfg.probe.n, "probe.k must satisfy 1 <= 2k <= probe.n/8");
  require(cfg.probe.eps > 0.0 && cfg.probe.eps < 1e-2, "probe.eps must lie in (0, 1e-2)");

  if (ov.seed) {
    cfg.seed = *ov.seed;
  } else if (doc.contains("seed")) {
    const json& seed = doc.at("seed");
    require(seed.is_number_unsigned() || (seed.is_number_integer() && seed.get<std::int64_t>() >= 0),
            "'seed' must be a non-negative integer");
    cfg.seed = doc.at("seed").get<std::uint64_t>();
  }
  if (ov.threads) {
    require(*ov.threads >= 1, "--threads must be >= 1");
    cfg.threads = ov.threads;
  }
  if (ov.out) cfg.output_dir = *ov.out;
  return cfg;
}

RunConfig load_config(Command command, const std::string& path, const Overrides& ov) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  json doc;
  try {
    doc = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ConfigError("malformed config '" + path + "': " + e.what());
  }
  return parse_config(command, doc, ov);
}

nlohmann::ordered_json effective_json(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["command"] = command_name(cfg.command);
  j["eos"] = cfg.eos_json;
  j["grid"] = {{"n", cfg.n}, {"order", cfg.stencil_order}};
  j["resolutions"] = cfg.resolutions;
  if (cfg.dt)
    j["dt"] = *cfg.dt;
  else
    j["dt"] = nullptr;
  j["dt_factor"] = cfg.dt_factor;
  j["t_center"] = cfg.t_center;
  j["fixture"] = cfg.fixture;
  j["seed"] = cfg.seed;
  j["tolerances"] = {{"metric", cfg.tol.metric},
                     {"frame", cfg.tol.frame},
                     {"exact", cfg.tol.exact},
                     {"eos_derivative", cfg.tol.eos_derivative}};
  j["shock1d"] = {{"amplitude", cfg.shock.amplitude},
                  {"search_points", cfg.shock.search_points},
                  {"crossing_samples", cfg.shock.crossing_samples},
                  {"pde_n", cfg.shock.pde_n},
                  {"series_points", cfg.shock.series_points},
                  {"profile_points", cfg.shock.profile_points},
                  {"end_fraction", cfg.shock.end_fraction},
                  {"reference_gamma", cfg.shock.reference_gamma},
                  {"horizon_factor", cfg.shock.horizon_factor}};
  j["nullframe"] = {{"trials", cfg.nullframe.trials},
                    {"c_min", cfg.nullframe.c_min},
                    {"c_max", cfg.nullframe.c_max},
                    {"v_max", cfg.nullframe.v_max}};
  j["probe"] = {{"n", cfg.probe.n}, {"k", cfg.probe.k}, {"eps", cfg.probe.eps}};
  return j;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string config_hash(const RunConfig& cfg) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(effective_json(cfg).dump())));
  return buf;
}

}  // namespace eulerform

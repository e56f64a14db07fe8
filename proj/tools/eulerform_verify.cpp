// Command-line driver: eulerform-verify <command> --config <path> [options]
//
// Exit codes: 0 all verdicts pass, 1 verification failure, 2 configuration
// or usage error, 3 numeric error.

#include <cstdio>
#include <filesystem>
#include <string>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "eulerform/config.hpp"
#include "eulerform/errors.hpp"
#include "eulerform/suites.hpp"

namespace fs = std::filesystem;
using namespace eulerform;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kConfig = 2;
constexpr int kNumeric = 3;

int run(const std::string& command, const std::string& config_path, const Overrides& ov) {
  RunConfig cfg = load_config(parse_command(command), config_path, ov);
#ifdef _OPENMP
  if (cfg.threads) omp_set_num_threads(*cfg.threads);
#endif
  SuiteResult result = run_suite(cfg);

  // Everything is computed before the first file is written.
  const fs::path dir(cfg.output_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory '" + cfg.output_dir + "': " + ec.message());
  for (const auto& f : result.files) f.write((dir / f.name).string());
  std::string name = command;
  for (char& ch : name)
    if (ch == '-') ch = '_';
  const fs::path report = dir / (name + ".json");
  const std::string text = result.report.dump(2) + "\n";
  std::FILE* fp = std::fopen(report.string().c_str(), "wb");
  if (!fp) throw ConfigError("cannot write '" + report.string() + "'");
  std::fwrite(text.data(), 1, text.size(), fp);
  std::fclose(fp);

  std::printf("%s: %s (%s)\n", command.c_str(), result.pass ? "PASS" : "FAIL", report.string().c_str());
  return result.pass ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification harness for the reformulated compressible Euler equations"};
  app.require_subcommand(1);

  std::string config_path;
  Overrides ov;
  std::string out_dir, eos_name;
  std::uint64_t seed = 42;
  int n = 0, threads = 0;

  const char* commands[] = {"eos-check", "geometry-check", "nullframe-check", "reform-verify",
                            "converge", "shock1d", "export"};
  for (const char* c : commands) {
    CLI::App* sub = app.add_subcommand(c);
    sub->add_option("--config", config_path, "JSON configuration file")->required();
    sub->add_option("--out", out_dir, "output directory (default: current directory)");
    sub->add_option("--seed", seed, "seed for random states (default 42)");
    sub->add_option("--n", n, "grid cells per axis; replaces the configured resolutions");
    sub->add_option("--eos", eos_name, "polytropic or chaplygin with default parameters");
    sub->add_option("--threads", threads, "OpenMP thread count");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kConfig;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const CLI::App* sub = app.get_subcommands().front();
  if (sub->count("--out")) ov.out = out_dir;
  if (sub->count("--seed")) ov.seed = seed;
  if (sub->count("--n")) ov.n = n;
  if (sub->count("--eos")) ov.eos = eos_name;
  if (sub->count("--threads")) ov.threads = threads;

  try {
    return run(command, config_path, ov);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kConfig;
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kConfig;
  } catch (const NumericError& e) {
    std::fprintf(stderr, "numeric error: %s\n", e.what());
    return kNumeric;
  } catch (const DomainError& e) {
    std::fprintf(stderr, "numeric error: %s\n", e.what());
    return kNumeric;
  }
}

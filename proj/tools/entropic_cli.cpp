// Copyright 2026 The entropic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "entropic/errors.hpp"
#include "entropic/runner/config.hpp"
#include "entropic/runner/experiments.hpp"
#include "entropic/runner/result_table.hpp"
#include "entropic/runner/verify.hpp"

namespace {

using namespace entropic::runner;

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kConfigParse = 2,
  kNumerical = 3,
  kConfigInvalid = 4,
};

struct Options {
  std::string config_path;
  std::string output;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> tolerances;
  bool timing = false;
  std::string format = "both";
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigParseError("cannot read config file '" + path + "'");
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

ExperimentConfig load(const Options& opt) {
  ExperimentConfig cfg = opt.config_path.empty() ? default_config() : parse_config(read_file(opt.config_path));
  if (opt.seed) {
    apply_seed_override(cfg, *opt.seed);
    build_systems(cfg);
  }
  for (const auto& t : opt.tolerances) apply_tolerance_override(cfg, t);
  if (!opt.output.empty()) cfg.output.directory = opt.output;
  if (opt.timing) cfg.output.timing = true;
  if (opt.format == "csv") {
    cfg.output.csv = true;
    cfg.output.json = false;
  } else if (opt.format == "json") {
    cfg.output.csv = false;
    cfg.output.json = true;
  }
  return cfg;
}

template <class Run>
int sweep(const std::string& name, const Options& opt, Run run) {
  const auto start = std::chrono::steady_clock::now();
  const ExperimentConfig cfg = load(opt);
  const ResultTable table = run(cfg);
  RunMetadata meta{name, ENTROPIC_VERSION, config_hash(cfg.source_text), std::nullopt};
  if (cfg.output.timing) {
    meta.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  const auto files = write_outputs(table, meta, cfg.output.directory, name, cfg.output.csv, cfg.output.json, std::cout);
  for (const auto& f : files.written) std::cerr << "wrote " << f << '\n';
  if (!table.all_checks_pass()) {
    std::cerr << "entropic: one or more check rows failed (see the checks table)\n";
    return kVerificationFailed;
  }
  return kOk;
}

int verify(const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  std::optional<ExperimentConfig> cfg;
  if (!opt.config_path.empty() || opt.seed || !opt.tolerances.empty()) cfg = load(opt);
  const VerifyReport report = run_verify(cfg);
  std::cout << report.table();
  const std::string dir = !opt.output.empty() ? opt.output : (cfg ? cfg->output.directory : std::string());
  if (!dir.empty()) {
    std::filesystem::create_directories(dir);
    const auto path = std::filesystem::path(dir) / "verify.csv";
    std::ofstream(path, std::ios::binary) << report.csv();
    std::cerr << "wrote " << path.string() << '\n';
  }
  if (opt.timing) {
    std::cerr << "wall time: " << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
              << " s\n";
  }
  return report.passed() ? kOk : kVerificationFailed;
}

int model(const Options& opt) {
  const ExperimentConfig cfg = load(opt);
  const std::string doc = describe_models(cfg);
  if (cfg.output.directory.empty()) {
    std::cout << doc;
  } else {
    std::filesystem::create_directories(cfg.output.directory);
    const auto path = std::filesystem::path(cfg.output.directory) / "model.json";
    std::ofstream(path, std::ios::binary) << doc;
    std::cerr << "wrote " << path.string() << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropic fluctuation functionals: sweeps, counting statistics and invariant checks"};
  app.set_version_flag("--version", std::string(ENTROPIC_VERSION));
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("-c,--config", opt.config_path, "Experiment config (JSON, // comments allowed)");
  app.add_option("-o,--output", opt.output, "Output directory (default: tables on stdout)");
  app.add_option("--seed", opt.seed, "Base seed for random systems (k-th random system gets seed + k)");
  app.add_option("--tol", opt.tolerances, "Tolerance override name=value (repeatable)")->take_all();
  app.add_flag("--timing", opt.timing, "Record wall time in the JSON document");
  app.add_option("--format", opt.format, "Output formats")->check(CLI::IsMember({"csv", "json", "both"}));

  auto* functionals = app.add_subcommand("functionals", "Sweep e_{p,t}(alpha) over the configured quantum systems");
  auto* fcs = app.add_subcommand("fcs", "Full counting statistics, modular measure and CGF");
  auto* classical = app.add_subcommand("classical", "Classical functional, ES distribution and checks");
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant battery");
  auto* model_cmd = app.add_subcommand("model", "Print the assembled two-reservoir system(s)");
  app.add_subcommand("print-config", "Print the built-in config");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigParse;
  }

  try {
    if (*functionals) return sweep("functionals", opt, run_functionals);
    if (*fcs) return sweep("fcs", opt, run_fcs);
    if (*classical) return sweep("classical", opt, run_classical);
    if (*verify_cmd) return verify(opt);
    if (*model_cmd) return model(opt);
    std::cout << default_config_text();
    return kOk;
  } catch (const ConfigParseError& e) {
    std::cerr << "entropic: " << e.what() << '\n';
    return kConfigParse;
  } catch (const ConfigValidationError& e) {
    std::cerr << "entropic: " << e.what() << '\n';
    return kConfigInvalid;
  } catch (const entropic::DomainError& e) {
    std::cerr << "entropic: numerical domain error: " << e.what() << '\n';
    return kNumerical;
  } catch (const entropic::DimensionError& e) {
    std::cerr << "entropic: dimension error: " << e.what() << '\n';
    return kNumerical;
  } catch (const entropic::InvariantViolation& e) {
    std::cerr << "entropic: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::exception& e) {
    std::cerr << "entropic: " << e.what() << '\n';
    return kNumerical;
  }
}

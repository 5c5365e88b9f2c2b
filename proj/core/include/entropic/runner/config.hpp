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

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "entropic/classical.hpp"
#include "entropic/functionals.hpp"
#include "entropic/models.hpp"

namespace entropic::runner {

/// Malformed config text (not parseable as commented JSON).
class ConfigParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed text that violates a constraint; names the offending key.
class ConfigValidationError : public std::runtime_error {
 public:
  ConfigValidationError(std::string key, const std::string& constraint);
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

struct ClassicalSpec {
  std::vector<double> reference_state;
};

struct QuantumSpec {
  Matrix hamiltonian;
  Matrix reference_state;
  bool tri = false;
};

struct ReservoirSpec {
  Matrix h_left;
  Matrix h_right;
  Matrix coupling;
  double beta_left = 1.0;
  double beta_right = 2.0;
};

struct RandomSpec {
  int dim = 4;
  bool tri = true;
  std::uint64_t seed = 1;
  double spread = 1.0;
};

struct SystemSpec {
  std::string id;
  std::variant<ClassicalSpec, QuantumSpec, ReservoirSpec, RandomSpec> kind;
};

struct SweepSpec {
  std::vector<double> alphas;
  std::vector<quantum::Exponent> ps;  // sorted, infinity last
  std::vector<double> ts;
  std::vector<std::int64_t> classical_ts;
};

struct OutputSpec {
  std::string directory;  // empty: write tables to stdout
  bool csv = true;
  bool json = true;
  bool timing = false;    // wall time in the JSON document (breaks byte-identity)
};

/// Every tolerance used by the sweeps and the verification battery.
struct Tolerances {
  double symmetry = 1e-10;
  double kawasaki = 1e-10;
  double bridge = 1e-10;
  double classical_bridge = 1e-12;
  double fcs = 1e-10;
  double cgf = 1e-10;
  double second_law = 1e-12;
  double entropy_identity = 1e-10;
  double derivative = 1e-6;
  double convexity = 1e-9;
  double monotonicity = 1e-10;
  double p_limit = 1e-3;
  double flux = 1e-8;
  double decomposition = 1e-10;
  double quadrature = 1e-8;
  double spectrum = 1e-10;

  /// Sets a tolerance by name; throws ConfigValidationError for unknown
  /// names or values that are not > 0.
  void set(std::string_view name, double value);
};

struct ExperimentConfig {
  std::vector<SystemSpec> systems;
  SweepSpec sweep;
  OutputSpec output;
  Tolerances tolerances;
  std::string source_text;
};

/// Parses commented JSON. Throws ConfigParseError or ConfigValidationError.
ExperimentConfig parse_config(std::string_view text);

/// The built-in configuration: canonical two-qubit reservoir model, the qubit
/// closed-form system, a random 4-level TRI system and a 3-point classical
/// system; p in {2, inf}, alpha in [-1, 2] step 0.05, t = 1.
ExperimentConfig default_config();
std::string_view default_config_text();

/// Replaces the seed of the k-th random system with seed + k.
void apply_seed_override(ExperimentConfig& cfg, std::uint64_t seed);

/// "name=value" tolerance override.
void apply_tolerance_override(ExperimentConfig& cfg, std::string_view assignment);

struct BuiltSystem {
  std::string id;
  std::variant<classical::ClassicalSystem, quantum::QuantumSystem> system;
  std::optional<models::ReservoirModel> reservoir;

  bool is_classical() const { return std::holds_alternative<classical::ClassicalSystem>(system); }
  const classical::ClassicalSystem& classical() const { return std::get<classical::ClassicalSystem>(system); }
  const quantum::QuantumSystem& quantum() const { return std::get<quantum::QuantumSystem>(system); }
};

/// Throws ConfigValidationError (with the system's key) when a spec does not
/// describe a valid system.
BuiltSystem build_system(const SystemSpec& spec, std::size_t index);
std::vector<BuiltSystem> build_systems(const ExperimentConfig& cfg);

}  // namespace entropic::runner

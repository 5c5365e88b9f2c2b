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

#include "entropic/runner/config.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <sstream>

#include <nlohmann/json.hpp>

#include "entropic/errors.hpp"

namespace entropic::runner {

using nlohmann::json;

namespace {

constexpr std::string_view kDefaultConfig = R"({
  // Built-in experiment: the canonical reservoir model plus three small systems.
  "systems": [
    {"id": "canonical", "type": "reservoir", "model": "canonical"},
    {"id": "qubit", "type": "quantum", "tri": true,
     "hamiltonian": [[[0, 0], [1, 0]], [[1, 0], [0, 0]]],
     "reference_state": [[[0.75, 0], [0, 0]], [[0, 0], [0.25, 0]]]},
    {"id": "random4", "type": "random", "dim": 4, "tri": true, "seed": 1, "spread": 1.0},
    {"id": "ring3", "type": "classical", "reference_state": [0.25, 0.5, 0.25]}
  ],
  "sweep": {
    "alpha": {"min": -1, "max": 2, "step": 0.05},
    "p": [2, "inf"],
    "t": [1],
    "classical_t": [1, 2]
  }
}
)";

std::string at(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t index) { return path + "[" + std::to_string(index) + "]"; }

void check_keys(const json& obj, std::initializer_list<std::string_view> allowed, const std::string& path) {
  for (const auto& [key, _] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigValidationError(at(path, key), "unknown key");
    }
  }
}

const json& require(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ConfigValidationError(at(path, key), "required key is missing");
  return *it;
}

double as_number(const json& v, const std::string& path) {
  if (!v.is_number()) throw ConfigValidationError(path, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigValidationError(path, "expected a finite number");
  return x;
}

bool as_bool(const json& v, const std::string& path) {
  if (!v.is_boolean()) throw ConfigValidationError(path, "expected true or false");
  return v.get<bool>();
}

Complex as_complex(const json& v, const std::string& path) {
  if (v.is_number()) return Complex(as_number(v, path), 0.0);
  if (!v.is_array() || v.size() != 2) throw ConfigValidationError(path, "expected a [re, im] pair");
  return Complex(as_number(v[0], at(path, 0)), as_number(v[1], at(path, 1)));
}

Matrix as_matrix(const json& v, const std::string& path) {
  if (!v.is_array() || v.empty()) throw ConfigValidationError(path, "expected a non-empty array of rows");
  const auto n = v.size();
  Matrix m(static_cast<Index>(n), static_cast<Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = v[i];
    if (!row.is_array() || row.size() != n) {
      throw ConfigValidationError(at(path, i), "matrix must be square (" + std::to_string(n) + " columns per row)");
    }
    for (std::size_t j = 0; j < n; ++j) {
      m(static_cast<Index>(i), static_cast<Index>(j)) = as_complex(row[j], at(at(path, i), j));
    }
  }
  return m;
}

Matrix as_hermitian(const json& v, const std::string& path) {
  Matrix m = as_matrix(v, path);
  const double defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (defect > 1e-12) throw ConfigValidationError(path, "matrix is not Hermitian");
  return m;
}

std::vector<double> as_alpha_grid(const json& v, const std::string& path) {
  if (v.is_object()) {
    check_keys(v, {"min", "max", "step"}, path);
    const double lo = as_number(require(v, "min", path), at(path, "min"));
    const double hi = as_number(require(v, "max", path), at(path, "max"));
    const double step = as_number(require(v, "step", path), at(path, "step"));
    if (!(step > 0.0)) throw ConfigValidationError(at(path, "step"), "must be > 0");
    if (hi < lo) throw ConfigValidationError(at(path, "max"), "must be >= min");
    return quantum::alpha_grid(lo, hi, step);
  }
  if (!v.is_array() || v.empty()) throw ConfigValidationError(path, "expected {min, max, step} or a non-empty list");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_number(v[i], at(path, i)));
  return out;
}

std::vector<quantum::Exponent> as_p_list(const json& v, const std::string& path) {
  if (!v.is_array() || v.empty()) throw ConfigValidationError(path, "expected a non-empty list");
  std::vector<quantum::Exponent> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto key = at(path, i);
    if (v[i].is_string()) {
      if (v[i].get<std::string>() != "inf") throw ConfigValidationError(key, "the only string allowed is \"inf\"");
      out.push_back(quantum::Exponent::infinity());
      continue;
    }
    const double p = as_number(v[i], key);
    if (p < 1.0) throw ConfigValidationError(key, "p must be >= 1 (use \"inf\" for infinity)");
    out.push_back(quantum::Exponent::finite(p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<double> as_times(const json& v, const std::string& path) {
  if (!v.is_array() || v.empty()) throw ConfigValidationError(path, "expected a non-empty list");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double t = as_number(v[i], at(path, i));
    if (!(t > 0.0)) throw ConfigValidationError(at(path, i), "t must be > 0");
    out.push_back(t);
  }
  return out;
}

std::vector<std::int64_t> as_classical_times(const json& v, const std::string& path) {
  if (!v.is_array() || v.empty()) throw ConfigValidationError(path, "expected a non-empty list");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double t = as_number(v[i], at(path, i));
    if (t != std::floor(t) || t < 1.0) throw ConfigValidationError(at(path, i), "classical t must be a positive integer");
    out.push_back(static_cast<std::int64_t>(t));
  }
  return out;
}

SystemSpec as_system(const json& v, const std::string& path, std::size_t index) {
  if (!v.is_object()) throw ConfigValidationError(path, "expected an object");
  const auto& type_node = require(v, "type", path);
  if (!type_node.is_string()) throw ConfigValidationError(at(path, "type"), "expected a string");
  const std::string type = type_node.get<std::string>();

  SystemSpec spec;
  spec.id = "system" + std::to_string(index);
  if (auto it = v.find("id"); it != v.end()) {
    if (!it->is_string() || it->get<std::string>().empty()) throw ConfigValidationError(at(path, "id"), "expected a non-empty string");
    spec.id = it->get<std::string>();
  }

  if (type == "classical") {
    check_keys(v, {"id", "type", "reference_state"}, path);
    const auto& w = require(v, "reference_state", path);
    if (!w.is_array() || w.size() < 2) throw ConfigValidationError(at(path, "reference_state"), "expected at least two probabilities");
    ClassicalSpec c;
    for (std::size_t i = 0; i < w.size(); ++i) c.reference_state.push_back(as_number(w[i], at(at(path, "reference_state"), i)));
    spec.kind = std::move(c);
  } else if (type == "quantum") {
    check_keys(v, {"id", "type", "hamiltonian", "reference_state", "tri"}, path);
    QuantumSpec q;
    q.hamiltonian = as_hermitian(require(v, "hamiltonian", path), at(path, "hamiltonian"));
    q.reference_state = as_hermitian(require(v, "reference_state", path), at(path, "reference_state"));
    if (q.hamiltonian.rows() != q.reference_state.rows()) {
      throw ConfigValidationError(at(path, "reference_state"), "dimension must match the hamiltonian");
    }
    if (auto it = v.find("tri"); it != v.end()) q.tri = as_bool(*it, at(path, "tri"));
    spec.kind = std::move(q);
  } else if (type == "reservoir") {
    check_keys(v, {"id", "type", "model", "epsilon", "h_left", "h_right", "coupling", "beta_left", "beta_right"}, path);
    ReservoirSpec r;
    if (auto it = v.find("beta_left"); it != v.end()) r.beta_left = as_number(*it, at(path, "beta_left"));
    if (auto it = v.find("beta_right"); it != v.end()) r.beta_right = as_number(*it, at(path, "beta_right"));
    if (!(r.beta_left > 0.0)) throw ConfigValidationError(at(path, "beta_left"), "beta must be > 0");
    if (!(r.beta_right > 0.0)) throw ConfigValidationError(at(path, "beta_right"), "beta must be > 0");
    if (auto it = v.find("model"); it != v.end()) {
      if (!it->is_string() || it->get<std::string>() != "canonical") {
        throw ConfigValidationError(at(path, "model"), "the only named model is \"canonical\"");
      }
      double eps = 0.25;
      if (auto e = v.find("epsilon"); e != v.end()) eps = as_number(*e, at(path, "epsilon"));
      const auto model = models::canonical_two_qubit_model(eps, r.beta_left, r.beta_right);
      r.h_left = model.h_left.matrix();
      r.h_right = model.h_right.matrix();
      r.coupling = model.coupling.matrix();
    } else {
      r.h_left = as_hermitian(require(v, "h_left", path), at(path, "h_left"));
      r.h_right = as_hermitian(require(v, "h_right", path), at(path, "h_right"));
      r.coupling = as_hermitian(require(v, "coupling", path), at(path, "coupling"));
      if (r.coupling.rows() != r.h_left.rows() * r.h_right.rows()) {
        throw ConfigValidationError(at(path, "coupling"), "must act on the product space (dim_left * dim_right)");
      }
    }
    spec.kind = std::move(r);
  } else if (type == "random") {
    check_keys(v, {"id", "type", "dim", "tri", "seed", "spread"}, path);
    RandomSpec r;
    const double dim = as_number(require(v, "dim", path), at(path, "dim"));
    if (dim != std::floor(dim) || dim < 2 || dim > 64) throw ConfigValidationError(at(path, "dim"), "must be an integer in [2, 64]");
    r.dim = static_cast<int>(dim);
    if (auto it = v.find("tri"); it != v.end()) r.tri = as_bool(*it, at(path, "tri"));
    if (auto it = v.find("seed"); it != v.end()) {
      if (!it->is_number_unsigned()) throw ConfigValidationError(at(path, "seed"), "expected a non-negative integer");
      r.seed = it->get<std::uint64_t>();
    }
    if (auto it = v.find("spread"); it != v.end()) r.spread = as_number(*it, at(path, "spread"));
    if (!(r.spread > 0.0)) throw ConfigValidationError(at(path, "spread"), "must be > 0");
    spec.kind = r;
  } else {
    throw ConfigValidationError(at(path, "type"), "expected one of classical, quantum, reservoir, random");
  }
  return spec;
}

}  // namespace

ConfigValidationError::ConfigValidationError(std::string key, const std::string& constraint)
    : std::runtime_error("invalid config at '" + key + "': " + constraint), key_(std::move(key)) {}

void Tolerances::set(std::string_view name, double value) {
  const std::string key = "tolerances." + std::string(name);
  if (!(value > 0.0) || !std::isfinite(value)) throw ConfigValidationError(key, "tolerance must be > 0");
  struct Entry {
    std::string_view name;
    double Tolerances::*field;
  };
  static constexpr Entry kFields[] = {
      {"symmetry", &Tolerances::symmetry},
      {"kawasaki", &Tolerances::kawasaki},
      {"bridge", &Tolerances::bridge},
      {"classical_bridge", &Tolerances::classical_bridge},
      {"fcs", &Tolerances::fcs},
      {"cgf", &Tolerances::cgf},
      {"second_law", &Tolerances::second_law},
      {"entropy_identity", &Tolerances::entropy_identity},
      {"derivative", &Tolerances::derivative},
      {"convexity", &Tolerances::convexity},
      {"monotonicity", &Tolerances::monotonicity},
      {"p_limit", &Tolerances::p_limit},
      {"flux", &Tolerances::flux},
      {"decomposition", &Tolerances::decomposition},
      {"quadrature", &Tolerances::quadrature},
      {"spectrum", &Tolerances::spectrum},
  };
  for (const auto& e : kFields) {
    if (e.name == name) {
      this->*e.field = value;
      return;
    }
  }
  throw ConfigValidationError(key, "unknown tolerance name");
}

ExperimentConfig parse_config(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end(), nullptr, /*allow_exceptions=*/true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ConfigParseError(std::string("malformed config: ") + e.what());
  }
  if (!root.is_object()) throw ConfigValidationError("<root>", "expected an object");
  check_keys(root, {"systems", "sweep", "output", "tolerances"}, "");

  ExperimentConfig cfg;
  cfg.source_text = std::string(text);

  const auto& systems = require(root, "systems", "");
  if (!systems.is_array() || systems.empty()) throw ConfigValidationError("systems", "expected a non-empty list");
  for (std::size_t i = 0; i < systems.size(); ++i) cfg.systems.push_back(as_system(systems[i], at("systems", i), i));
  for (std::size_t i = 0; i < cfg.systems.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (cfg.systems[i].id == cfg.systems[j].id) throw ConfigValidationError(at(at("systems", i), "id"), "duplicate id");
    }
  }

  const auto& sweep = require(root, "sweep", "");
  if (!sweep.is_object()) throw ConfigValidationError("sweep", "expected an object");
  check_keys(sweep, {"alpha", "p", "t", "classical_t"}, "sweep");
  cfg.sweep.alphas = as_alpha_grid(require(sweep, "alpha", "sweep"), "sweep.alpha");
  cfg.sweep.ps = as_p_list(require(sweep, "p", "sweep"), "sweep.p");
  cfg.sweep.ts = as_times(require(sweep, "t", "sweep"), "sweep.t");
  cfg.sweep.classical_ts = {1};
  if (auto it = sweep.find("classical_t"); it != sweep.end()) cfg.sweep.classical_ts = as_classical_times(*it, "sweep.classical_t");

  if (auto it = root.find("output"); it != root.end()) {
    const auto& out = *it;
    if (!out.is_object()) throw ConfigValidationError("output", "expected an object");
    check_keys(out, {"directory", "formats", "timing"}, "output");
    if (auto d = out.find("directory"); d != out.end()) {
      if (!d->is_string()) throw ConfigValidationError("output.directory", "expected a string");
      cfg.output.directory = d->get<std::string>();
    }
    if (auto f = out.find("formats"); f != out.end()) {
      if (!f->is_array() || f->empty()) throw ConfigValidationError("output.formats", "expected a non-empty list");
      cfg.output.csv = cfg.output.json = false;
      for (std::size_t i = 0; i < f->size(); ++i) {
        const auto& name = (*f)[i];
        if (name == "csv") cfg.output.csv = true;
        else if (name == "json") cfg.output.json = true;
        else throw ConfigValidationError(at("output.formats", i), "expected \"csv\" or \"json\"");
      }
    }
    if (auto tm = out.find("timing"); tm != out.end()) cfg.output.timing = as_bool(*tm, "output.timing");
  }

  if (auto it = root.find("tolerances"); it != root.end()) {
    if (!it->is_object()) throw ConfigValidationError("tolerances", "expected an object");
    for (const auto& [name, value] : it->items()) cfg.tolerances.set(name, as_number(value, "tolerances." + name));
  }

  // Surface invalid states and Hamiltonians now rather than mid-run.
  build_systems(cfg);
  return cfg;
}

std::string_view default_config_text() { return kDefaultConfig; }

ExperimentConfig default_config() { return parse_config(kDefaultConfig); }

void apply_seed_override(ExperimentConfig& cfg, std::uint64_t seed) {
  std::uint64_t k = 0;
  for (auto& s : cfg.systems) {
    if (auto* r = std::get_if<RandomSpec>(&s.kind)) r->seed = seed + k++;
  }
}

void apply_tolerance_override(ExperimentConfig& cfg, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) throw ConfigValidationError(std::string(assignment), "expected name=value");
  const std::string name(assignment.substr(0, eq));
  const std::string value(assignment.substr(eq + 1));
  double parsed = 0.0;
  try {
    std::size_t used = 0;
    parsed = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
  } catch (const std::exception&) {
    throw ConfigValidationError("tolerances." + name, "value is not a number");
  }
  cfg.tolerances.set(name, parsed);
}

BuiltSystem build_system(const SystemSpec& spec, std::size_t index) {
  const std::string key = "systems[" + std::to_string(index) + "]";
  try {
    return std::visit(
        [&](const auto& kind) -> BuiltSystem {
          using T = std::decay_t<decltype(kind)>;
          if constexpr (std::is_same_v<T, ClassicalSpec>) {
            RealVector w = Eigen::Map<const RealVector>(kind.reference_state.data(),
                                                        static_cast<Index>(kind.reference_state.size()));
            return {spec.id, classical::ClassicalSystem(classical::ClassicalState(w)), std::nullopt};
          } else if constexpr (std::is_same_v<T, QuantumSpec>) {
            return {spec.id,
                    quantum::QuantumSystem(HermitianOperator::checked(kind.hamiltonian),
                                           quantum::DensityMatrix(kind.reference_state), kind.tri),
                    std::nullopt};
          } else if constexpr (std::is_same_v<T, ReservoirSpec>) {
            auto model = models::build_two_reservoir(HermitianOperator::checked(kind.h_left),
                                                     HermitianOperator::checked(kind.h_right), kind.beta_left,
                                                     kind.beta_right, HermitianOperator::checked(kind.coupling));
            auto sys = model.assembled;
            return {spec.id, std::move(sys), std::move(model)};
          } else {
            return {spec.id, models::random_system(kind.dim, kind.tri, kind.seed, kind.spread), std::nullopt};
          }
        },
        spec.kind);
  } catch (const DomainError& e) {
    throw ConfigValidationError(key, e.what());
  } catch (const DimensionError& e) {
    throw ConfigValidationError(key, e.what());
  }
}

std::vector<BuiltSystem> build_systems(const ExperimentConfig& cfg) {
  std::vector<BuiltSystem> out;
  out.reserve(cfg.systems.size());
  for (std::size_t i = 0; i < cfg.systems.size(); ++i) out.push_back(build_system(cfg.systems[i], i));
  return out;
}

}  // namespace entropic::runner

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

#include "entropic/runner/experiments.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <nlohmann/json.hpp>

#include "entropic/errors.hpp"
#include "entropic/fcs.hpp"

namespace entropic::runner {

namespace {

template <class F>
auto in_context(const std::string& context, F&& f) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw DomainError(context + ": " + e.what());
  } catch (const DimensionError& e) {
    throw DimensionError(context + ": " + e.what());
  }
}

std::string context_of(const std::string& id, const std::string& t) { return "system '" + id + "', t=" + t; }

CheckRow check(const std::string& id, std::string p, std::string t, std::optional<double> alpha, double value,
               std::string name, double tol) {
  return {id, std::move(p), std::move(t), alpha, value, std::move(name), value <= tol};
}

// Index of 1 - alphas[i] in the grid, if present.
std::optional<std::size_t> mirror_index(const std::vector<double>& alphas, std::size_t i) {
  const double target = 1.0 - alphas[i];
  for (std::size_t j = 0; j < alphas.size(); ++j) {
    if (std::abs(alphas[j] - target) <= 1e-12) return j;
  }
  return std::nullopt;
}

nlohmann::ordered_json matrix_json(const Matrix& m) {
  auto rows = nlohmann::ordered_json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

ResultTable run_functionals(const ExperimentConfig& cfg) {
  const auto systems = build_systems(cfg);
  const auto& alphas = cfg.sweep.alphas;
  const auto& tol = cfg.tolerances;
  ResultTable table;
  for (const auto& sys : systems) {
    if (sys.is_classical()) continue;
    const auto& q = sys.quantum();
    for (const auto& p : cfg.sweep.ps) {
      const std::string p_text = p.to_string();
      for (double t : cfg.sweep.ts) {
        const std::string t_text = format_number(t);
        const auto values = in_context(context_of(sys.id, t_text) + ", p=" + p_text, [&] {
          const quantum::FunctionalEvaluator e(q, t);
          std::vector<double> v;
          v.reserve(alphas.size());
          for (double a : alphas) v.push_back(e(p, a));
          return std::make_pair(v, std::array<double, 2>{e(p, 0.0), e(p, 1.0)});
        });
        for (std::size_t i = 0; i < alphas.size(); ++i) {
          table.curves.push_back({sys.id, p_text, t_text, alphas[i], values.first[i]});
        }
        table.checks.push_back(check(sys.id, p_text, t_text, 0.0, std::abs(values.second[0]), "kawasaki", tol.kawasaki));
        table.checks.push_back(check(sys.id, p_text, t_text, 1.0, std::abs(values.second[1]), "kawasaki", tol.kawasaki));
        if (!q.is_tri()) continue;
        for (std::size_t i = 0; i < alphas.size(); ++i) {
          if (const auto j = mirror_index(alphas, i)) {
            const double asym = std::abs(values.first[i] - values.first[*j]);
            table.checks.push_back(check(sys.id, p_text, t_text, alphas[i], asym, "symmetry", tol.symmetry));
          }
        }
      }
    }
  }
  return table;
}

ResultTable run_fcs(const ExperimentConfig& cfg) {
  const auto systems = build_systems(cfg);
  const auto& tol = cfg.tolerances;
  ResultTable table;
  for (const auto& sys : systems) {
    if (sys.is_classical()) continue;
    const auto& q = sys.quantum();
    for (double t : cfg.sweep.ts) {
      const std::string t_text = format_number(t);
      in_context(context_of(sys.id, t_text), [&] {
        const auto p_measure = quantum::fcs_distribution(q, t);
        const auto q_measure = quantum::modular_spectral_measure(q, t);
        for (const auto& a : p_measure.atoms()) table.distributions.push_back({sys.id, t_text, a.value, a.weight, "P"});
        for (const auto& a : q_measure.atoms()) table.distributions.push_back({sys.id, t_text, a.value, a.weight, "Q"});

        if (q.is_tri()) {
          const double tv = total_variation(p_measure, q_measure, tol.fcs);
          table.checks.push_back(check(sys.id, "", t_text, std::nullopt, tv, "tv_distance", tol.fcs));
        } else {
          const double tv = total_variation(q_measure, reflect_and_tilt(p_measure, t), tol.fcs);
          table.checks.push_back(check(sys.id, "", t_text, std::nullopt, tv, "tilted_tv_distance", tol.fcs));
        }

        const quantum::FunctionalEvaluator e(q, t);
        const auto two = quantum::Exponent::finite(2.0);
        for (double a : cfg.sweep.alphas) {
          const double cgf = quantum::fcs_cgf(p_measure, a, t);
          table.curves.push_back({sys.id, "2", t_text, a, cgf});
          table.checks.push_back(check(sys.id, "2", t_text, a, std::abs(cgf - e(two, a)), "cgf_identity", tol.cgf));
        }
        return 0;
      });
    }
  }
  return table;
}

ResultTable run_classical(const ExperimentConfig& cfg) {
  const auto systems = build_systems(cfg);
  const auto& alphas = cfg.sweep.alphas;
  const auto& tol = cfg.tolerances;
  ResultTable table;
  for (const auto& sys : systems) {
    if (!sys.is_classical()) continue;
    const auto& c = sys.classical();
    const bool tri = c.is_tri();
    for (std::int64_t t : cfg.sweep.classical_ts) {
      const std::string t_text = std::to_string(t);
      in_context(context_of(sys.id, t_text), [&] {
        std::vector<double> values;
        values.reserve(alphas.size());
        for (double a : alphas) values.push_back(classical::functional(c, a, t));
        for (std::size_t i = 0; i < alphas.size(); ++i) table.curves.push_back({sys.id, "", t_text, alphas[i], values[i]});

        const auto es = classical::es_distribution(c, t);
        for (const auto& a : es.atoms()) table.distributions.push_back({sys.id, t_text, a.value, a.weight, "ES"});

        table.checks.push_back(check(sys.id, "", t_text, 0.0, std::abs(classical::functional(c, 0.0, t)), "kawasaki",
                                     tol.kawasaki));
        table.checks.push_back(check(sys.id, "", t_text, 1.0, std::abs(classical::functional(c, 1.0, t)), "kawasaki",
                                     tol.kawasaki));
        for (std::size_t i = 0; i < alphas.size(); ++i) {
          double residual = 0.0;
          try {
            residual = classical::renyi_identity_check(c, alphas[i], t).residual;
          } catch (const InvariantViolation& e) {
            residual = e.residual();
          }
          table.checks.push_back(
              check(sys.id, "", t_text, alphas[i], residual, "renyi_identity", tol.classical_bridge));
        }
        if (tri) {
          for (std::size_t i = 0; i < alphas.size(); ++i) {
            if (const auto j = mirror_index(alphas, i)) {
              table.checks.push_back(check(sys.id, "", t_text, alphas[i], std::abs(values[i] - values[*j]), "symmetry",
                                           tol.symmetry));
            }
          }
          table.checks.push_back(check(sys.id, "", t_text, std::nullopt,
                                       fluctuation_relation_residual(es, static_cast<double>(t), tol.fcs),
                                       "es_fluctuation_relation", tol.fcs));
        }
        return 0;
      });
    }
  }
  return table;
}

std::string describe_models(const ExperimentConfig& cfg) {
  using nlohmann::ordered_json;
  auto systems = build_systems(cfg);
  std::vector<std::pair<std::string, models::ReservoirModel>> reservoirs;
  for (auto& s : systems) {
    if (s.reservoir) reservoirs.emplace_back(s.id, *s.reservoir);
  }
  if (reservoirs.empty()) reservoirs.emplace_back("canonical", models::canonical_two_qubit_model());

  ordered_json doc;
  doc["models"] = ordered_json::array();
  for (const auto& [id, model] : reservoirs) {
    const auto& sys = model.assembled;
    ordered_json m;
    m["id"] = id;
    m["dim_left"] = model.dim_left();
    m["dim_right"] = model.dim_right();
    m["beta_left"] = model.beta_left;
    m["beta_right"] = model.beta_right;
    m["z_left"] = model.z_left;
    m["z_right"] = model.z_right;
    m["tri"] = sys.is_tri();
    m["hamiltonian"] = matrix_json(sys.hamiltonian().matrix());
    m["reference_state"] = matrix_json(sys.reference_state().matrix());
    m["coupling"] = matrix_json(model.coupling.matrix());
    const auto sigma = in_context("model '" + id + "'", [&] { return models::entropy_production_decomposition(model); });
    m["entropy_production_observable"] = matrix_json(sigma.matrix());
    m["decomposition_residual"] =
        frobenius(sigma.matrix() - quantum::entropy_production_observable(sys).matrix());
    auto& mean = m["mean_entropy_production"] = ordered_json::array();
    for (double t : cfg.sweep.ts) {
      mean.push_back({{"t", t}, {"value", in_context("model '" + id + "'", [&] {
                                   return quantum::mean_entropy_production(sys, t);
                                 })}});
    }
    doc["models"].push_back(std::move(m));
  }
  return doc.dump(2) + "\n";
}

}  // namespace entropic::runner

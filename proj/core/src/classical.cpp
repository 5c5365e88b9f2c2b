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

#include "entropic/classical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "entropic/errors.hpp"

namespace entropic::classical {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kMinProbability = 1e-300;

void require_same_size(Index a, Index b, const char* what) {
  if (a != b) {
    std::ostringstream os;
    os << what << ": size mismatch (" << a << " vs " << b << ")";
    throw DimensionError(os.str());
  }
}

void require_positive_time(std::int64_t t, const char* what) {
  if (t <= 0) {
    std::ostringstream os;
    os << what << ": t must be a positive integer, got " << t;
    throw DomainError(os.str());
  }
}

Index wrap(std::int64_t j, Index n) {
  const std::int64_t r = j % static_cast<std::int64_t>(n);
  return static_cast<Index>(r < 0 ? r + n : r);
}

// log omega_0(zeta_{j+t}) as a vector over j.
RealVector shifted_log(const ClassicalSystem& sys, std::int64_t t) {
  const Index n = sys.size();
  const RealVector& w = sys.reference_state().probabilities();
  RealVector out(n);
  for (Index j = 0; j < n; ++j) out(j) = std::log(w(wrap(j + t, n)));
  return out;
}

}  // namespace

ClassicalObservable operator*(const ClassicalObservable& f, const ClassicalObservable& g) {
  require_same_size(f.size(), g.size(), "observable product");
  return ClassicalObservable(f.values_.cwiseProduct(g.values_));
}

ClassicalObservable operator-(const ClassicalObservable& f, const ClassicalObservable& g) {
  require_same_size(f.size(), g.size(), "observable difference");
  return ClassicalObservable(f.values_ - g.values_);
}

ClassicalState::ClassicalState(RealVector probabilities) : p_(std::move(probabilities)) {
  if (p_.size() == 0) throw DomainError("classical state must have at least one point");
  if (p_.minCoeff() <= kMinProbability) throw DomainError("classical state must be strictly positive");
  const double total = p_.sum();
  if (std::abs(total - 1.0) > kNormTol) {
    std::ostringstream os;
    os << "classical state sums to " << total << ", expected 1";
    throw DomainError(os.str());
  }
}

ClassicalState ClassicalState::normalized(RealVector weights) {
  const double total = weights.sum();
  if (!(total > 0.0)) throw DomainError("classical weights must have positive total");
  return ClassicalState(weights / total);
}

ClassicalState ClassicalState::uniform(Index n) {
  return ClassicalState(RealVector::Constant(n, 1.0 / static_cast<double>(n)));
}

double ClassicalState::expectation(const ClassicalObservable& f) const {
  require_same_size(f.size(), size(), "expectation");
  return p_.dot(f.values());
}

ClassicalSystem::ClassicalSystem(ClassicalState reference_state) : omega_(std::move(reference_state)) {}

bool ClassicalSystem::is_tri(double tol) const {
  const Index n = size();
  for (Index j = 0; j < n; ++j) {
    if (std::abs(omega_(j) - omega_(n - 1 - j)) > tol) return false;
  }
  return true;
}

ClassicalObservable evolve_observable(const ClassicalSystem& sys, const ClassicalObservable& f, std::int64_t t) {
  const Index n = sys.size();
  require_same_size(f.size(), n, "evolve_observable");
  RealVector out(n);
  for (Index j = 0; j < n; ++j) out(j) = f(wrap(j + t, n));
  return ClassicalObservable(std::move(out));
}

ClassicalState evolve_state(const ClassicalSystem& sys, const ClassicalState& rho, std::int64_t t) {
  const Index n = sys.size();
  require_same_size(rho.size(), n, "evolve_state");
  RealVector out(n);
  for (Index j = 0; j < n; ++j) out(j) = rho(wrap(j - t, n));
  return ClassicalState(std::move(out));
}

double relative_entropy(const ClassicalState& rho, const ClassicalState& nu) {
  require_same_size(rho.size(), nu.size(), "relative_entropy");
  double s = 0.0;
  for (Index j = 0; j < rho.size(); ++j) s += rho(j) * std::log(nu(j) / rho(j));
  return s;
}

double renyi_entropy(const ClassicalState& rho, const ClassicalState& nu, double alpha) {
  require_same_size(rho.size(), nu.size(), "renyi_entropy");
  RealVector terms(rho.size());
  for (Index j = 0; j < rho.size(); ++j) terms(j) = (1.0 - alpha) * std::log(rho(j)) + alpha * std::log(nu(j));
  return log_sum_exp(terms);
}

ClassicalObservable entropy_observable(const ClassicalSystem& sys) {
  return ClassicalObservable(-sys.reference_state().probabilities().array().log().matrix());
}

ClassicalObservable entropy_production_observable(const ClassicalSystem& sys) {
  const RealVector log_omega = shifted_log(sys, 0);
  return ClassicalObservable(log_omega - shifted_log(sys, 1));
}

ClassicalObservable mean_ep_observable(const ClassicalSystem& sys, std::int64_t t) {
  require_positive_time(t, "mean_ep_observable");
  const double inv_t = 1.0 / static_cast<double>(t);
  const auto s0 = entropy_observable(sys);
  const RealVector direct = inv_t * (evolve_observable(sys, s0, t) - s0).values();

  const auto sigma = entropy_production_observable(sys);
  RealVector summed = RealVector::Zero(sys.size());
  for (std::int64_t s = 0; s < t; ++s) summed += evolve_observable(sys, sigma, s).values();
  summed *= inv_t;

  const double residual = (direct - summed).cwiseAbs().maxCoeff();
  if (residual > 1e-12) throw InvariantViolation("classical mean_ep_observable sum agreement", residual, 1e-12);
  return ClassicalObservable(direct);
}

double functional(const ClassicalSystem& sys, double alpha, std::int64_t t) {
  require_positive_time(t, "functional");
  // omega_0 e^{-alpha t Sigma^t} = omega_0^{1-alpha} (omega_0 o phi^t)^alpha
  const RealVector log0 = shifted_log(sys, 0);
  const RealVector logt = shifted_log(sys, t);
  const RealVector terms = (1.0 - alpha) * log0 + alpha * logt;
  return log_sum_exp(terms) - log_sum_exp(log0);
}

SpectralMeasure es_distribution(const ClassicalSystem& sys, std::int64_t t) {
  const auto sigma_t = mean_ep_observable(sys, t);
  std::vector<Atom> points;
  points.reserve(static_cast<std::size_t>(sys.size()));
  for (Index j = 0; j < sys.size(); ++j) points.push_back({sigma_t(j), sys.reference_state()(j)});
  return SpectralMeasure::from_points(std::move(points), 1e-10, 0.0);
}

double variational_objective(const ClassicalSystem& sys, const ClassicalState& rho, double alpha, std::int64_t t) {
  const auto sigma_t = mean_ep_observable(sys, t);
  return relative_entropy(rho, sys.reference_state()) - alpha * static_cast<double>(t) * rho.expectation(sigma_t);
}

VariationalResult variational_functional(const ClassicalSystem& sys, double alpha, std::int64_t t, int trials,
                                         std::uint64_t seed) {
  if (trials < 10) throw DomainError("variational_functional: at least 10 perturbation trials are required");
  const auto sigma_t = mean_ep_observable(sys, t);
  const double at = alpha * static_cast<double>(t);
  const RealVector log_weights = sys.reference_state().probabilities().array().log().matrix() - at * sigma_t.values();
  const double shift = log_weights.maxCoeff();
  const auto maximizer = ClassicalState::normalized((log_weights.array() - shift).exp().matrix());

  auto objective = [&](const ClassicalState& rho) {
    return relative_entropy(rho, sys.reference_state()) - at * rho.expectation(sigma_t);
  };

  VariationalResult result;
  result.value = objective(maximizer);
  result.maximizer = maximizer;
  result.functional_residual = std::abs(result.value - functional(sys, alpha, t));

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> jitter(0.0, 1.0);
  result.best_perturbed = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < trials; ++k) {
    // log-normal multiplicative jitter with scale growing over the trials
    const double scale = 1e-3 * std::pow(10.0, 3.0 * k / std::max(1, trials - 1));
    RealVector w = maximizer.probabilities();
    for (Index j = 0; j < w.size(); ++j) w(j) *= std::exp(scale * jitter(rng));
    result.best_perturbed = std::max(result.best_perturbed, objective(ClassicalState::normalized(w)));
  }

  if (result.functional_residual > 1e-12) {
    throw InvariantViolation("classical variational formula", result.functional_residual, 1e-12);
  }
  if (result.best_perturbed - result.value > 1e-10) {
    throw InvariantViolation("classical variational maximality", result.best_perturbed - result.value, 1e-10);
  }
  return result;
}

CheckedValue renyi_identity_check(const ClassicalSystem& sys, double alpha, std::int64_t t) {
  const auto omega_t = evolve_state(sys, sys.reference_state(), t);
  CheckedValue out;
  out.value = renyi_entropy(omega_t, sys.reference_state(), alpha);
  out.reference = functional(sys, alpha, t);
  out.residual = std::abs(out.value - out.reference);
  if (out.residual > 1e-12) throw InvariantViolation("classical Renyi identity", out.residual, 1e-12);
  return out;
}

double lp_norm(const ClassicalSystem& sys, const ClassicalObservable& f, double p) {
  require_same_size(f.size(), sys.size(), "lp_norm");
  if (p < 1.0) throw DomainError("lp_norm: p must be >= 1");
  const RealVector& w = sys.reference_state().probabilities();
  return std::pow(f.values().cwiseAbs().array().pow(p).matrix().dot(w), 1.0 / p);
}

namespace {

// e^{(S_0 - S_{-t}) / p} for any nonzero real index p
RealVector transfer_weight(const ClassicalSystem& sys, double p, std::int64_t t) {
  // S_0 - S_{-t} = log omega_0(zeta_{j-t}) - log omega_0(zeta_j)
  return ((shifted_log(sys, -t) - shifted_log(sys, 0)) / p).array().exp().matrix();
}

}  // namespace

ClassicalObservable transfer_apply(const ClassicalSystem& sys, double p, const ClassicalObservable& f,
                                   std::int64_t t) {
  if (p < 1.0) throw DomainError("transfer_apply: p must be >= 1");
  return ClassicalObservable(evolve_observable(sys, f, -t).values().cwiseProduct(transfer_weight(sys, p, t)));
}

double transfer_functional(const ClassicalSystem& sys, double p, double alpha, std::int64_t t) {
  if (alpha == 0.0) throw DomainError("transfer_functional: alpha = 0 makes the index p/alpha undefined");
  if (p < 1.0) throw DomainError("transfer_functional: p must be >= 1");
  const RealVector unit_image = transfer_weight(sys, p / alpha, t);  // U_{p/alpha}(t) 1
  const RealVector& w = sys.reference_state().probabilities();
  return std::log(unit_image.cwiseAbs().array().pow(p).matrix().dot(w));
}

}  // namespace entropic::classical
